#include "bcpc/mbag.hpp"

#include <algorithm>
#include <chrono>

namespace bcpc {

bool adjacent(const Biclique& a, const Biclique& b, int alpha, int beta) {
  return intersection_at_least(a.xs, b.xs, alpha) &&
         intersection_at_least(a.ys, b.ys, beta);
}

std::vector<int> neighbor_candidates(const MbeTree& tree, int b,
                                     const std::vector<char>& filtered) {
  std::vector<char> seen(tree.bicliques.size(), 0);
  std::vector<int> out;
  const Biclique& bc = tree.bicliques[static_cast<std::size_t>(b)];
  auto scan = [&](const std::vector<int>& ids) {
    for (int id : ids) {
      if (id == b || seen[static_cast<std::size_t>(id)] ||
          !filtered[static_cast<std::size_t>(id)])
        continue;
      seen[static_cast<std::size_t>(id)] = 1;
      out.push_back(id);
    }
  };
  for (int x : bc.xs) scan(tree.index_u[static_cast<std::size_t>(x)]);
  for (int y : bc.ys) scan(tree.index_v[static_cast<std::size_t>(y)]);
  std::sort(out.begin(), out.end());
  return out;
}

void run_adjacency_pass(const MbeTree& tree, int alpha, int beta,
                        DisjointSets& uf, RunStats& stats) {
  std::vector<int> ids = filter_by_size(tree, alpha, beta);
  std::vector<char> filtered(tree.bicliques.size(), 0);
  for (int id : ids) filtered[static_cast<std::size_t>(id)] = 1;
  // Scratch reused across rows; ids stamped per row instead of reallocating.
  std::vector<int> stamp(tree.bicliques.size(), -1);
  std::vector<int> candidates;
  for (int b : ids) {
    candidates.clear();
    const Biclique& bc = tree.bicliques[static_cast<std::size_t>(b)];
    auto scan = [&](const std::vector<int>& list) {
      for (int id : list) {
        if (id <= b || !filtered[static_cast<std::size_t>(id)]) continue;
        if (stamp[static_cast<std::size_t>(id)] == b) continue;
        stamp[static_cast<std::size_t>(id)] = b;
        candidates.push_back(id);
      }
    };
    for (int x : bc.xs) scan(tree.index_u[static_cast<std::size_t>(x)]);
    for (int y : bc.ys) scan(tree.index_v[static_cast<std::size_t>(y)]);
    std::sort(candidates.begin(), candidates.end());
    for (int c : candidates) {
      if (uf.find(b) == uf.find(c)) continue;  // already one community
      ++stats.adjacency_tests;
      if (adjacent(bc, tree.bicliques[static_cast<std::size_t>(c)], alpha, beta))
        uf.unite(b, c);
    }
  }
}

CommunityResult finalize_detection(std::vector<Biclique> bicliques, int alpha,
                                   int beta, DisjointSets uf, RunStats stats) {
  CommunityResult result;
  result.alpha = alpha;
  result.beta = beta;
  result.filtered_ids = filter_by_size(bicliques, alpha, beta);
  result.bicliques = std::move(bicliques);
  result.assignment = std::move(uf);
  stats.n_biclique = result.bicliques.size();
  stats.filtered = result.filtered_ids.size();
  stats.unions = static_cast<std::uint64_t>(result.assignment.size() -
                                            result.assignment.count());
  std::vector<char> seen_root(result.bicliques.size(), 0);
  std::uint64_t sets = 0;
  for (int id : result.filtered_ids) {
    int root = result.assignment.find(id);
    if (!seen_root[static_cast<std::size_t>(root)]) {
      seen_root[static_cast<std::size_t>(root)] = 1;
      ++sets;
    }
  }
  stats.bcpc = sets;
  result.stats = stats;
  return result;
}

CommunityResult detect_mbag(const BipartiteGraph& g, int alpha, int beta) {
  if (alpha < 1 || beta < 1) throw std::invalid_argument("detect_mbag: thresholds must be >= 1");
  auto start = std::chrono::steady_clock::now();
  MbeTree tree = enumerate_maximal_bicliques(g);
  RunStats stats;
  stats.tree_nodes = tree.enum_nodes;
  DisjointSets uf(static_cast<int>(tree.bicliques.size()));
  run_adjacency_pass(tree, alpha, beta, uf, stats);
  CommunityResult result =
      finalize_detection(std::move(tree.bicliques), alpha, beta, std::move(uf), stats);
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace bcpc
