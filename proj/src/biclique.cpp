#include "bcpc/biclique.hpp"

#include <algorithm>
#include <sstream>

#include "bcpc/bigraph.hpp"

namespace bcpc {

std::string to_string(const Biclique& b) {
  std::ostringstream out;
  for (std::size_t i = 0; i < b.xs.size(); ++i) {
    if (i) out << ',';
    out << b.xs[i];
  }
  out << " | ";
  for (std::size_t i = 0; i < b.ys.size(); ++i) {
    if (i) out << ',';
    out << b.ys[i];
  }
  return out.str();
}

bool is_complete(const BipartiteGraph& g, const Biclique& b) {
  for (int x : b.xs) {
    const auto& nbrs = g.neighbors_u(x);
    for (int y : b.ys)
      if (!std::binary_search(nbrs.begin(), nbrs.end(), y)) return false;
  }
  return true;
}

bool intersection_at_least(const std::vector<int>& a, const std::vector<int>& b,
                           int k) {
  if (k <= 0) return true;
  int hits = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      if (++hits >= k) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

std::vector<int> intersect_sorted(const std::vector<int>& a,
                                  const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace bcpc
