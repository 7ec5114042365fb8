#include "bcpc/oracle.hpp"

#include <algorithm>
#include <limits>

#include "bcpc/community.hpp"
#include "bcpc/union_find.hpp"

namespace bcpc {

namespace {

std::uint64_t binomial(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (result > cap) return cap + 1;
  }
  return result;
}

}  // namespace

std::vector<Biclique> oracle_maximal_bicliques(const BipartiteGraph& g,
                                               const OracleLimits& limits) {
  bool u_smaller = g.n_u <= g.n_v;
  int small_n = u_smaller ? g.n_u : g.n_v;
  int large_n = u_smaller ? g.n_v : g.n_u;
  if (small_n > limits.max_side)
    throw OracleLimitError("oracle_maximal_bicliques: smaller side exceeds max_side");
  std::uint64_t subsets = std::uint64_t{1} << small_n;
  if (subsets * static_cast<std::uint64_t>(std::max(large_n, 1)) > limits.max_pairs)
    throw OracleLimitError("oracle_maximal_bicliques: subset sweep exceeds max_pairs");

  // Adjacency of each larger-side vertex as a bitmask over the smaller side.
  const auto& large_adj = u_smaller ? g.adj_v : g.adj_u;
  std::vector<std::uint64_t> mask(static_cast<std::size_t>(large_n), 0);
  for (int w = 0; w < large_n; ++w)
    for (int s : large_adj[static_cast<std::size_t>(w)])
      mask[static_cast<std::size_t>(w)] |= std::uint64_t{1} << s;

  std::vector<Biclique> out;
  for (std::uint64_t s = 1; s < subsets; ++s) {
    std::vector<int> opposite;
    std::uint64_t closure = subsets - 1;  // all smaller-side vertices
    for (int w = 0; w < large_n; ++w) {
      if ((mask[static_cast<std::size_t>(w)] & s) == s) {
        opposite.push_back(w);
        closure &= mask[static_cast<std::size_t>(w)];
      }
    }
    if (opposite.empty() || closure != s) continue;  // not closed both ways
    std::vector<int> small_vertices;
    for (int i = 0; i < small_n; ++i)
      if (s & (std::uint64_t{1} << i)) small_vertices.push_back(i);
    Biclique b;
    b.xs = u_smaller ? small_vertices : opposite;
    b.ys = u_smaller ? opposite : small_vertices;
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Biclique>> oracle_bcpc(const BipartiteGraph& g, int alpha,
                                               int beta, const OracleLimits& limits) {
  if (alpha < 1 || beta < 1) throw std::invalid_argument("oracle_bcpc: thresholds must be >= 1");
  std::vector<Biclique> all = oracle_maximal_bicliques(g, limits);
  std::vector<Biclique> kept;
  for (Biclique& b : all)
    if (static_cast<int>(b.xs.size()) >= alpha && static_cast<int>(b.ys.size()) >= beta)
      kept.push_back(std::move(b));
  std::uint64_t n = kept.size();
  if (n * n > limits.max_pairs)
    throw OracleLimitError("oracle_bcpc: pairwise adjacency exceeds max_pairs");
  DisjointSets uf(static_cast<int>(n));
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = i + 1; j < kept.size(); ++j)
      if (intersection_at_least(kept[i].xs, kept[j].xs, alpha) &&
          intersection_at_least(kept[i].ys, kept[j].ys, beta))
        uf.unite(static_cast<int>(i), static_cast<int>(j));
  std::vector<std::vector<Biclique>> groups(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i)
    groups[static_cast<std::size_t>(uf.find(static_cast<int>(i)))].push_back(kept[i]);
  std::vector<std::vector<Biclique>> parts;
  for (auto& group : groups)
    if (!group.empty()) parts.push_back(std::move(group));
  return canonical_partition(std::move(parts));
}

std::uint64_t oracle_count_ab(const BipartiteGraph& g, int alpha, int beta,
                              const OracleLimits& limits) {
  if (alpha < 1 || beta < 1)
    throw std::invalid_argument("oracle_count_ab: thresholds must be >= 1");
  if (std::min(g.n_u, g.n_v) > limits.max_side)
    throw OracleLimitError("oracle_count_ab: smaller side exceeds max_side");
  std::uint64_t work = binomial(g.n_u, alpha, limits.max_pairs) *
                       binomial(g.n_v, beta, limits.max_pairs);
  if (work > limits.max_pairs)
    throw OracleLimitError("oracle_count_ab: combination sweep exceeds max_pairs");

  std::uint64_t count = 0;
  std::vector<int> chosen;
  // All alpha-subsets of U with their running common neighborhood; each
  // contributes C(|common|, beta) complete pairs.
  auto recurse = [&](auto&& self, int next, const std::vector<int>& common) -> void {
    if (static_cast<int>(chosen.size()) == alpha) {
      count += binomial(static_cast<int>(common.size()), beta,
                        std::numeric_limits<std::uint64_t>::max() / 2);
      return;
    }
    int need = alpha - static_cast<int>(chosen.size());
    for (int u = next; u <= g.n_u - need; ++u) {
      std::vector<int> common2 =
          chosen.empty() ? g.adj_u[static_cast<std::size_t>(u)]
                         : intersect_sorted(common, g.adj_u[static_cast<std::size_t>(u)]);
      if (static_cast<int>(common2.size()) < beta) continue;
      chosen.push_back(u);
      self(self, u + 1, common2);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, {});
  return count;
}

}  // namespace bcpc
