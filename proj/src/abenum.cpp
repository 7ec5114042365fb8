#include "bcpc/abenum.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

#include "bcpc/mbag.hpp"

namespace bcpc {

TwoHopGraph build_two_hop(const BipartiteGraph& g) {
  TwoHopGraph h;
  h.out.assign(static_cast<std::size_t>(g.n_u), {});
  std::vector<int> stamp(static_cast<std::size_t>(g.n_u), -1);
  for (int u = 0; u < g.n_u; ++u) {
    auto& out = h.out[static_cast<std::size_t>(u)];
    for (int v : g.adj_u[static_cast<std::size_t>(u)]) {
      for (int w : g.adj_v[static_cast<std::size_t>(v)]) {
        if (w > u && stamp[static_cast<std::size_t>(w)] != u) {
          stamp[static_cast<std::size_t>(w)] = u;
          out.push_back(w);
        }
      }
    }
    std::sort(out.begin(), out.end());
  }
  return h;
}

namespace {

// One recursion engine for the listing family. Vertex combinations on the U
// side follow the 2-hop graph (edges point to higher indices, so chosen sets
// stay sorted); at |R_U| = alpha the V side is extended one member at a
// time. In pruned mode the ids of maximal bicliques containing the current
// partial biclique are threaded down and a branch is dropped as soon as they
// map to at most one set.
class AbLister {
 public:
  AbLister(const BipartiteGraph& g, int alpha, int beta) : g_(g), alpha_(alpha), beta_(beta) {
    if (alpha < 1 || beta < 1)
      throw std::invalid_argument("ab listing: thresholds must be >= 1");
    if (alpha >= 2) h_ = build_two_hop(g);
  }

  void set_sink(const AbSink* sink) { sink_ = sink; }

  void set_detection(const MbeTree* tree, DisjointSets* uf, bool prune) {
    tree_ = tree;
    uf_ = uf;
    prune_ = prune;
  }

  EnumStats run() {
    std::vector<int> cand_u(static_cast<std::size_t>(g_.n_u));
    for (int u = 0; u < g_.n_u; ++u) cand_u[static_cast<std::size_t>(u)] = u;
    std::vector<int> c_v(static_cast<std::size_t>(g_.n_v));
    for (int v = 0; v < g_.n_v; ++v) c_v[static_cast<std::size_t>(v)] = v;
    std::vector<int> rb;
    if (prune_) rb = filter_by_size(*tree_, alpha_, beta_);
    listing(cand_u, c_v, rb);
    return stats_;
  }

 private:
  bool merged_or_empty(const std::vector<int>& rb) {
    if (rb.empty()) return true;
    int first = uf_->find(rb[0]);
    for (std::size_t i = 1; i < rb.size(); ++i)
      if (uf_->find(rb[i]) != first) return false;
    return true;
  }

  void listing(const std::vector<int>& cand_u, const std::vector<int>& c_v,
               const std::vector<int>& rb) {
    ++stats_.tree_nodes;
    if (prune_ && merged_or_empty(rb)) return;
    if (static_cast<int>(r_u_.size()) == alpha_) {
      combos(c_v, 0, rb);
      return;
    }
    int depth_left = alpha_ - static_cast<int>(r_u_.size()) - 1;
    for (int u : cand_u) {
      std::vector<int> c_v2 = intersect_sorted(c_v, g_.adj_u[static_cast<std::size_t>(u)]);
      if (static_cast<int>(c_v2.size()) < beta_) continue;
      std::vector<int> cand2;
      if (depth_left > 0) {
        cand2 = intersect_sorted(cand_u, h_.out[static_cast<std::size_t>(u)]);
        if (static_cast<int>(cand2.size()) < depth_left) continue;
      }
      std::vector<int> rb2;
      if (prune_) rb2 = intersect_sorted(rb, tree_->index_u[static_cast<std::size_t>(u)]);
      r_u_.push_back(u);
      listing(cand2, c_v2, rb2);
      r_u_.pop_back();
    }
  }

  void combos(const std::vector<int>& c_v, std::size_t start, const std::vector<int>& rb) {
    int remaining = beta_ - static_cast<int>(r_v_.size());
    if (c_v.size() < static_cast<std::size_t>(remaining)) return;
    std::size_t limit = c_v.size() - static_cast<std::size_t>(remaining);
    for (std::size_t i = start; i <= limit; ++i) {
      ++stats_.tree_nodes;
      int v = c_v[i];
      std::vector<int> rb2;
      if (prune_) {
        rb2 = intersect_sorted(rb, tree_->index_v[static_cast<std::size_t>(v)]);
        if (merged_or_empty(rb2)) continue;
      }
      r_v_.push_back(v);
      if (remaining == 1) {
        ++stats_.emitted;
        if (sink_) (*sink_)(r_u_, r_v_);
        if (uf_) connect(rb2);
      } else {
        combos(c_v, i + 1, rb2);
      }
      r_v_.pop_back();
    }
  }

  void connect(const std::vector<int>& rb) {
    const std::vector<int>& sharers = prune_ ? rb : scratch_sharers();
#ifndef NDEBUG
    for (int id : sharers) {
      const Biclique& b = tree_->bicliques[static_cast<std::size_t>(id)];
      assert(std::includes(b.xs.begin(), b.xs.end(), r_u_.begin(), r_u_.end()));
      assert(std::includes(b.ys.begin(), b.ys.end(), r_v_.begin(), r_v_.end()));
    }
#endif
    for (std::size_t i = 1; i < sharers.size(); ++i)
      if (uf_->unite(sharers[0], sharers[i])) ++stats_.unions;
  }

  // Maximal bicliques containing the emitted biclique, recomputed from the
  // inverted index (plain mode has no threaded candidate set).
  const std::vector<int>& scratch_sharers() {
    sharers_ = tree_->index_u[static_cast<std::size_t>(r_u_[0])];
    for (std::size_t i = 1; i < r_u_.size() && !sharers_.empty(); ++i)
      sharers_ = intersect_sorted(sharers_, tree_->index_u[static_cast<std::size_t>(r_u_[i])]);
    for (std::size_t i = 0; i < r_v_.size() && !sharers_.empty(); ++i)
      sharers_ = intersect_sorted(sharers_, tree_->index_v[static_cast<std::size_t>(r_v_[i])]);
    return sharers_;
  }

  const BipartiteGraph& g_;
  int alpha_;
  int beta_;
  TwoHopGraph h_;
  const AbSink* sink_ = nullptr;
  const MbeTree* tree_ = nullptr;
  DisjointSets* uf_ = nullptr;
  bool prune_ = false;
  std::vector<int> r_u_, r_v_, sharers_;
  EnumStats stats_;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

EnumStats enumerate_ab(const BipartiteGraph& g, int alpha, int beta,
                       const AbSink& sink) {
  AbLister lister(g, alpha, beta);
  if (sink) lister.set_sink(&sink);
  return lister.run();
}

std::uint64_t count_ab(const BipartiteGraph& g, int alpha, int beta) {
  return enumerate_ab(g, alpha, beta, nullptr).emitted;
}

namespace {

CommunityResult detect_listing(const BipartiteGraph& g, int alpha, int beta,
                               bool prune) {
  auto start = std::chrono::steady_clock::now();
  MbeTree tree = enumerate_maximal_bicliques(g);
  DisjointSets uf(static_cast<int>(tree.bicliques.size()));
  AbLister lister(g, alpha, beta);
  lister.set_detection(&tree, &uf, prune);
  EnumStats enum_stats = lister.run();
  RunStats stats;
  stats.tree_nodes = enum_stats.tree_nodes;
  CommunityResult result =
      finalize_detection(std::move(tree.bicliques), alpha, beta, std::move(uf), stats);
  result.stats.wall_ms = elapsed_ms(start);
  return result;
}

}  // namespace

CommunityResult detect_ab(const BipartiteGraph& g, int alpha, int beta) {
  return detect_listing(g, alpha, beta, false);
}

CommunityResult detect_ab_m(const BipartiteGraph& g, int alpha, int beta) {
  return detect_listing(g, alpha, beta, true);
}

CommunityResult run_ab_pruned_phase(const BipartiteGraph& g, int alpha, int beta,
                                    const MbeTree& tree, PartialState seed) {
  if (!tree.ab || tree.ab->alpha != alpha || tree.ab->beta != beta)
    throw std::invalid_argument("run_ab_pruned_phase: seed thresholds do not match");
  if (seed.uf.size() != static_cast<int>(tree.bicliques.size()))
    throw std::invalid_argument("run_ab_pruned_phase: seed does not cover the bicliques");
  auto start = std::chrono::steady_clock::now();
  AbLister lister(g, alpha, beta);
  lister.set_detection(&tree, &seed.uf, true);
  EnumStats enum_stats = lister.run();
  RunStats stats;
  stats.tree_nodes = enum_stats.tree_nodes;
  stats.pbcpc_plus = seed.partial_sets;
  CommunityResult result =
      finalize_detection(tree.bicliques, alpha, beta, std::move(seed.uf), stats);
  result.stats.wall_ms = elapsed_ms(start);
  return result;
}

CommunityResult detect_ab_p(const BipartiteGraph& g, int alpha, int beta) {
  auto start = std::chrono::steady_clock::now();
  PartialPlusRun run = run_partial_plus(g, alpha, beta);
  CommunityResult result =
      run_ab_pruned_phase(g, alpha, beta, run.tree, std::move(run.state));
  result.stats.wall_ms = elapsed_ms(start);
  return result;
}

}  // namespace bcpc
