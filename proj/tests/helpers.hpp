#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "bcpc/bigraph.hpp"
#include "bcpc/community.hpp"
#include "bcpc/gen.hpp"
#include "bcpc/oracle.hpp"

namespace bcpc::test {

inline BipartiteGraph from_text(const std::string& text, bool swap = false) {
  std::istringstream in(text);
  return load_edge_list(in, swap);
}

inline BipartiteGraph k22() {
  return from_edges(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

// Three U vertices with neighborhoods {v0,v1,v2}, {v0,v1,v2,v3}, {v1,v2,v3}.
// Its maximal bicliques are ({0,1},{0,1,2}), ({0,1,2},{1,2}), ({1},{0,1,2,3})
// and ({1,2},{1,2,3}); at alpha=beta=2 the first, second and fourth form one
// community and the third is filtered out.
inline BipartiteGraph middle_subgraph() {
  return from_edges(3, 4,
                    {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {1, 3},
                     {2, 1}, {2, 2}, {2, 3}});
}

inline BipartiteGraph two_disjoint_blocks(int size) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      edges.emplace_back(i, j);
      edges.emplace_back(size + i, size + j);
    }
  return from_edges(2 * size, 2 * size, edges);
}

inline std::vector<std::vector<Biclique>> partition_of(const CommunityResult& r) {
  return r.communities();
}

}  // namespace bcpc::test
