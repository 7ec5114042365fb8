#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bcpc/community.hpp"
#include "bcpc/mbe.hpp"
#include "bcpc/pbcpc.hpp"

namespace bcpc {

/// Directed graph on the U side: an edge (u, w) with u < w exists iff u and
/// w share at least one V neighbor. Acyclic by construction.
struct TwoHopGraph {
  std::vector<std::vector<int>> out;  // sorted, all > u
};

TwoHopGraph build_two_hop(const BipartiteGraph& g);

/// Counters of one (alpha,beta)-biclique enumeration.
struct EnumStats {
  std::uint64_t tree_nodes = 0;   // recursion nodes entered
  std::uint64_t emitted = 0;      // distinct (alpha,beta)-bicliques
  std::uint64_t unions = 0;       // successful merges during the listing
};

/// Invoke sink exactly once per (alpha,beta)-biclique of g: X of size alpha,
/// Y of size beta, complete. Requires alpha, beta >= 1.
using AbSink = std::function<void(const std::vector<int>& xs, const std::vector<int>& ys)>;
EnumStats enumerate_ab(const BipartiteGraph& g, int alpha, int beta,
                       const AbSink& sink);

/// Count of (alpha,beta)-bicliques, without detection.
std::uint64_t count_ab(const BipartiteGraph& g, int alpha, int beta);

/// Detection by plain listing: for each (alpha,beta)-biclique, merge every
/// filtered maximal biclique containing it.
CommunityResult detect_ab(const BipartiteGraph& g, int alpha, int beta);

/// Listing with containment pruning: a branch is abandoned once the maximal
/// bicliques containing the current partial biclique map to at most one set.
CommunityResult detect_ab_m(const BipartiteGraph& g, int alpha, int beta);

/// Pruned listing seeded with the postorder partial merges, which reach the
/// pruning condition earlier.
CommunityResult detect_ab_p(const BipartiteGraph& g, int alpha, int beta);

/// The listing phase of detect_ab_p given precomputed enumeration results
/// and seed state. Exposed so callers can stage or time the phases apart;
/// detect_ab_p is equivalent to run_partial_plus followed by this.
CommunityResult run_ab_pruned_phase(const BipartiteGraph& g, int alpha, int beta,
                                    const MbeTree& tree, PartialState seed);

}  // namespace bcpc
