#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bcpc/biclique.hpp"
#include "bcpc/bigraph.hpp"

namespace bcpc {

/// Caps on brute-force work. The oracle refuses inputs beyond them rather
/// than silently degrading.
struct OracleLimits {
  int max_side = 16;                    // cap on min(|U|, |V|)
  std::uint64_t max_pairs = 10'000'000; // cap on pairwise/combinatorial work
};

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All maximal bicliques (both sides nonempty) by subset enumeration over
/// the smaller side, canonical and sorted.
std::vector<Biclique> oracle_maximal_bicliques(const BipartiteGraph& g,
                                               const OracleLimits& limits = {});

/// Reference partition: filter by size, build the explicit adjacency over
/// all pairs, take connected components. Canonicalized.
std::vector<std::vector<Biclique>> oracle_bcpc(const BipartiteGraph& g,
                                               int alpha, int beta,
                                               const OracleLimits& limits = {});

/// Count of (alpha,beta)-bicliques by checking every (alpha-subset,
/// beta-subset) pair for completeness.
std::uint64_t oracle_count_ab(const BipartiteGraph& g, int alpha, int beta,
                              const OracleLimits& limits = {});

}  // namespace bcpc
