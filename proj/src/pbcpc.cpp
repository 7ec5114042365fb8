#include "bcpc/pbcpc.hpp"

#include <chrono>
#include <stdexcept>

#include "bcpc/mbag.hpp"

namespace bcpc {

namespace {

std::uint64_t count_sets_among(DisjointSets& uf, const std::vector<int>& ids,
                               std::size_t universe) {
  std::vector<char> seen(universe, 0);
  std::uint64_t sets = 0;
  for (int id : ids) {
    int root = uf.find(id);
    if (!seen[static_cast<std::size_t>(root)]) {
      seen[static_cast<std::size_t>(root)] = 1;
      ++sets;
    }
  }
  return sets;
}

void gather_subtree_bicliques(const MbeNode& node, std::vector<int>& out,
                              std::uint64_t& visited) {
  ++visited;
  if (node.biclique_id >= 0) out.push_back(node.biclique_id);
  for (const auto& child : node.children)
    gather_subtree_bicliques(*child, out, visited);
}

// Threshold nodes form an antichain, so recursion stops at the first one on
// each path.
void merge_threshold_subtrees(const MbeNode& node, DisjointSets& uf,
                              std::vector<int>& scratch, std::uint64_t& visited) {
  if (node.ab_node) {
    scratch.clear();
    gather_subtree_bicliques(node, scratch, visited);
    for (std::size_t i = 1; i < scratch.size(); ++i) uf.unite(scratch[0], scratch[i]);
    return;
  }
  ++visited;
  for (const auto& child : node.children)
    merge_threshold_subtrees(*child, uf, scratch, visited);
}

// Interleaved postorder pass. For every threshold node (stored or virtual)
// it merges all maximal bicliques sharing the node's chosen sets, searching
// the tree built so far from the root and cutting each branch at the first
// stop-label. Real nodes below a threshold node only merge their children's
// stop-labels.
class PartialPlusDriver : public PostorderObserver {
 public:
  explicit PartialPlusDriver(const BipartiteGraph& g)
      : uv_u_(static_cast<std::size_t>(g.n_u), 0),
        uv_v_(static_cast<std::size_t>(g.n_v), 0),
        r_u_(static_cast<std::size_t>(g.n_u), 0),
        r_v_(static_cast<std::size_t>(g.n_v), 0) {}

  DisjointSets uf;
  std::uint64_t nodes_visited = 0;

  void on_node_complete(const NodeView& view) override {
    if (view.leaf_biclique_id >= 0)
      while (uf.size() <= view.leaf_biclique_id) uf.add();
    pending_.clear();
    if (view.ab_node) {
      ++epoch_;
      for (int u : view.rcx_u) uv_u_[static_cast<std::size_t>(u)] = epoch_;
      for (int v : view.rcx_v) uv_v_[static_cast<std::size_t>(v)] = epoch_;
      for (int u : *view.r_u) r_u_[static_cast<std::size_t>(u)] = epoch_;
      for (int v : *view.r_v) r_v_[static_cast<std::size_t>(v)] = epoch_;
      search(*view.root);
    } else if (view.is_real && view.has_ab_ancestor) {
      pending_ = collect_subtree_labels(*view.node);
    } else {
      return;
    }
    if (!pending_.empty()) {
      for (std::size_t i = 1; i < pending_.size(); ++i) uf.unite(pending_[0], pending_[i]);
      if (view.node) view.node->stop_label = pending_[0];
    }
  }

 private:
  bool in_uv(Side side, int w) const {
    return (side == Side::U ? uv_u_[static_cast<std::size_t>(w)]
                            : uv_v_[static_cast<std::size_t>(w)]) == epoch_;
  }
  bool in_r(Side side, int w) const {
    return (side == Side::U ? r_u_[static_cast<std::size_t>(w)]
                            : r_v_[static_cast<std::size_t>(w)]) == epoch_;
  }

  // Follows only edges inside the threshold node's combined sets; once the
  // edge vertex is one of the chosen vertices, later siblings cannot hold a
  // sharing biclique.
  void search(const MbeNode& node) {
    for (const auto& child : node.children) {
      ++nodes_visited;
      if (in_uv(child->edge_side, child->edge_vertex)) {
        if (child->stop_label >= 0)
          pending_.push_back(child->stop_label);
        else if (child->biclique_id >= 0)
          pending_.push_back(child->biclique_id);
        else
          search(*child);
      }
      if (in_r(child->edge_side, child->edge_vertex)) break;
    }
  }

  std::vector<int> pending_;
  std::vector<int> uv_u_, uv_v_, r_u_, r_v_;
  int epoch_ = 0;
};

}  // namespace

PartialState compute_partial_basic(const MbeTree& tree, int alpha, int beta) {
  if (!tree.root) throw std::invalid_argument("compute_partial_basic: tree was not retained");
  if (!tree.ab || tree.ab->alpha != alpha || tree.ab->beta != beta)
    throw std::invalid_argument("compute_partial_basic: tree thresholds do not match");
  PartialState state;
  state.uf = DisjointSets(static_cast<int>(tree.bicliques.size()));
  std::vector<int> scratch;
  merge_threshold_subtrees(*tree.root, state.uf, scratch, state.nodes_visited);
  state.partial_sets = count_sets_among(state.uf, filter_by_size(tree, alpha, beta),
                                        tree.bicliques.size());
  return state;
}

std::vector<int> collect_subtree_labels(const MbeNode& node) {
  if (node.biclique_id >= 0) return {node.biclique_id};
  std::vector<int> labels;
  labels.reserve(node.children.size());
  for (const auto& child : node.children) {
    if (child->stop_label < 0)
      throw std::logic_error("collect_subtree_labels: child has no stop-label");
    labels.push_back(child->stop_label);
  }
  return labels;
}

PartialPlusRun run_partial_plus(const BipartiteGraph& g, int alpha, int beta,
                                bool reverse_order) {
  if (alpha < 1 || beta < 1)
    throw std::invalid_argument("run_partial_plus: thresholds must be >= 1");
  PartialPlusDriver driver(g);
  MbeOptions opts;
  opts.retain_tree = true;
  opts.ab = AbParams{alpha, beta};
  opts.reverse_order = reverse_order;
  PartialPlusRun run{enumerate_maximal_bicliques(g, opts, &driver), {}};
  while (driver.uf.size() < static_cast<int>(run.tree.bicliques.size())) driver.uf.add();
  run.state.uf = std::move(driver.uf);
  run.state.nodes_visited = driver.nodes_visited;
  run.state.partial_sets = count_sets_among(
      run.state.uf, filter_by_size(run.tree, alpha, beta), run.tree.bicliques.size());
  return run;
}

CommunityResult traverse_reduced_mbag(const MbeTree& tree, int alpha, int beta,
                                      PartialState state) {
  RunStats stats;
  stats.tree_nodes = tree.enum_nodes;
  run_adjacency_pass(tree, alpha, beta, state.uf, stats);
  return finalize_detection(tree.bicliques, alpha, beta, std::move(state.uf), stats);
}

CommunityResult detect_pbcpc(const BipartiteGraph& g, int alpha, int beta) {
  if (alpha < 1 || beta < 1)
    throw std::invalid_argument("detect_pbcpc: thresholds must be >= 1");
  auto start = std::chrono::steady_clock::now();
  MbeOptions opts;
  opts.retain_tree = true;
  opts.ab = AbParams{alpha, beta};
  MbeTree tree = enumerate_maximal_bicliques(g, opts);
  PartialState state = compute_partial_basic(tree, alpha, beta);
  std::uint64_t partial_sets = state.partial_sets;
  CommunityResult result = traverse_reduced_mbag(tree, alpha, beta, std::move(state));
  result.stats.pbcpc = partial_sets;
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

CommunityResult detect_pbcpc_plus(const BipartiteGraph& g, int alpha, int beta) {
  auto start = std::chrono::steady_clock::now();
  PartialPlusRun run = run_partial_plus(g, alpha, beta);
  std::uint64_t partial_sets = run.state.partial_sets;
  CommunityResult result = traverse_reduced_mbag(run.tree, alpha, beta, std::move(run.state));
  result.stats.pbcpc_plus = partial_sets;
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace bcpc
