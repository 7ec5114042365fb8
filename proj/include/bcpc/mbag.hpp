#pragma once

#include <vector>

#include "bcpc/community.hpp"
#include "bcpc/mbe.hpp"

namespace bcpc {

/// True iff a and b share at least alpha U vertices and beta V vertices.
bool adjacent(const Biclique& a, const Biclique& b, int alpha, int beta);

/// Distinct filtered ids != b whose biclique shares at least one vertex with
/// biclique b, ascending. `filtered` is a per-id membership mask.
std::vector<int> neighbor_candidates(const MbeTree& tree, int b,
                                     const std::vector<char>& filtered);

/// Test every unordered candidate pair not yet in one set and merge the
/// adjacent ones. Counts tests and successful merges into stats.
void run_adjacency_pass(const MbeTree& tree, int alpha, int beta,
                        DisjointSets& uf, RunStats& stats);

/// Baseline detection: enumerate maximal bicliques, filter by size, and
/// traverse the implicit biclique adjacency graph with a union-find set.
CommunityResult detect_mbag(const BipartiteGraph& g, int alpha, int beta);

/// Assemble a CommunityResult from a finished run; fills the n_biclique,
/// filtered, bcpc and unions counters.
CommunityResult finalize_detection(std::vector<Biclique> bicliques, int alpha,
                                   int beta, DisjointSets uf, RunStats stats);

}  // namespace bcpc
