#pragma once

#include <compare>
#include <string>
#include <vector>

namespace bcpc {

struct BipartiteGraph;

/// A complete bipartite subgraph in canonical form: both vertex sequences
/// strictly increasing.
struct Biclique {
  std::vector<int> xs;  // U-side indices
  std::vector<int> ys;  // V-side indices

  friend bool operator==(const Biclique&, const Biclique&) = default;
  friend auto operator<=>(const Biclique&, const Biclique&) = default;
};

/// "x1,x2,... | y1,y2,..." with members ascending.
std::string to_string(const Biclique& b);

/// True iff every (x, y) pair is an edge of g.
bool is_complete(const BipartiteGraph& g, const Biclique& b);

/// |a ∩ b| >= k for sorted sequences, with early exit.
bool intersection_at_least(const std::vector<int>& a, const std::vector<int>& b,
                           int k);

/// Sorted intersection of two sorted sequences.
std::vector<int> intersect_sorted(const std::vector<int>& a,
                                  const std::vector<int>& b);

}  // namespace bcpc
