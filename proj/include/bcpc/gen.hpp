#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bcpc/bigraph.hpp"

namespace bcpc {

/// Edges of a random bipartite graph: each (u, v) pair present with
/// probability p. Deterministic for a fixed seed.
std::vector<std::pair<int, int>> gen_random_edges(int n_u, int n_v, double p,
                                                  std::uint64_t seed);

/// Edges of a chain of complete bipartite blocks. Consecutive blocks share
/// `overlap` vertices on each side. Requires 0 <= overlap < size.
std::vector<std::pair<int, int>> gen_block_chain_edges(int blocks, int size,
                                                       int overlap);

/// Keep round(frac * n) distinct edges of the input, chosen uniformly under
/// the seed and returned sorted. frac = 1 keeps the whole edge set. Works on
/// raw labels so sampled files stay comparable with their source.
std::vector<std::pair<long long, long long>> sample_edges(
    std::vector<std::pair<long long, long long>> edges, double frac,
    std::uint64_t seed);

BipartiteGraph gen_random(int n_u, int n_v, double p, std::uint64_t seed);
BipartiteGraph gen_block_chain(int blocks, int size, int overlap);

}  // namespace bcpc
