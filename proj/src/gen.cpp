#include "bcpc/gen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace bcpc {

std::vector<std::pair<int, int>> gen_random_edges(int n_u, int n_v, double p,
                                                  std::uint64_t seed) {
  if (n_u < 0 || n_v < 0 || p < 0.0 || p > 1.0)
    throw std::invalid_argument("gen_random_edges: bad parameters");
  std::mt19937_64 rng(seed);
  // Fixed-point threshold keeps the draw independent of library internals.
  auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);  // 2^53
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n_u; ++u)
    for (int v = 0; v < n_v; ++v)
      if ((rng() >> 11) < threshold) edges.emplace_back(u, v);
  return edges;
}

std::vector<std::pair<int, int>> gen_block_chain_edges(int blocks, int size,
                                                       int overlap) {
  if (blocks < 1 || size < 1 || overlap < 0 || overlap >= size)
    throw std::invalid_argument("gen_block_chain_edges: bad parameters");
  std::vector<std::pair<int, int>> edges;
  int stride = size - overlap;
  for (int b = 0; b < blocks; ++b) {
    int base = b * stride;
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) edges.emplace_back(base + i, base + j);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<std::pair<long long, long long>> sample_edges(
    std::vector<std::pair<long long, long long>> edges, double frac,
    std::uint64_t seed) {
  if (frac < 0.0 || frac > 1.0) throw std::invalid_argument("sample_edges: frac outside [0, 1]");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  auto keep = static_cast<std::size_t>(
      std::llround(frac * static_cast<double>(edges.size())));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < keep; ++i) {  // partial Fisher-Yates
    std::size_t j = i + static_cast<std::size_t>(rng() % (edges.size() - i));
    std::swap(edges[i], edges[j]);
  }
  edges.resize(keep);
  std::sort(edges.begin(), edges.end());
  return edges;
}

BipartiteGraph gen_random(int n_u, int n_v, double p, std::uint64_t seed) {
  return from_edges(n_u, n_v, gen_random_edges(n_u, n_v, p, seed));
}

BipartiteGraph gen_block_chain(int blocks, int size, int overlap) {
  int n = blocks * (size - overlap) + overlap;
  return from_edges(n, n, gen_block_chain_edges(blocks, size, overlap));
}

}  // namespace bcpc
