#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcpc {

enum class Side : std::uint8_t { U, V };

/// A vertex of one side of a bipartite graph, identified by its dense
/// 0-based index within that side.
struct VertexId {
  Side side = Side::U;
  int index = 0;

  friend bool operator==(const VertexId&, const VertexId&) = default;
};

/// Thrown when an edge-list stream contains a malformed line. Carries the
/// 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Immutable two-sided adjacency structure. Adjacency lists are sorted,
/// deduplicated and symmetric (v in adj_u[u] iff u in adj_v[v]). Safe to
/// share read-only across concurrent algorithm runs once constructed.
struct BipartiteGraph {
  int n_u = 0;
  int n_v = 0;
  std::size_t m = 0;
  std::vector<std::vector<int>> adj_u;  // per U vertex: sorted V indices
  std::vector<std::vector<int>> adj_v;  // per V vertex: sorted U indices

  const std::vector<int>& neighbors_u(int u) const;
  const std::vector<int>& neighbors_v(int v) const;
  const std::vector<int>& neighbors(VertexId x) const;
};

/// Build a graph from explicit (u, v) index pairs. Duplicate edges collapse.
BipartiteGraph from_edges(int n_u, int n_v,
                          const std::vector<std::pair<int, int>>& edges);

/// Parse a whitespace-separated edge list. Each non-comment line holds two
/// non-negative integer labels "u v"; lines starting with '%' or '#' are
/// comments. Labels are compacted to dense 0-based indices per side in
/// first-appearance order; duplicate edges collapse. With swap_sides the
/// two columns are read as (v, u). An empty stream yields an empty graph.
BipartiteGraph load_edge_list(std::istream& in, bool swap_sides = false);
BipartiteGraph load_edge_list_file(const std::string& path,
                                   bool swap_sides = false);

/// Canonical "u v" lines that reload to an identical graph. Requires a graph
/// whose indices follow first-appearance order of some edge stream (true of
/// every loaded graph); throws otherwise, since an edge list cannot encode
/// isolated vertices or out-of-order labels.
void write_edge_list(std::ostream& out, const BipartiteGraph& g);

/// For each U vertex, the number of distinct other U vertices sharing at
/// least one common neighbor.
std::vector<int> two_hop_degrees(const BipartiteGraph& g);

/// Permutation of the U side ordered by ascending 2-hop degree, ties broken
/// by ascending index.
std::vector<int> two_hop_order(const BipartiteGraph& g);

}  // namespace bcpc
