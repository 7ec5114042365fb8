#include "bcpc/mbe.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace bcpc {

namespace {

// |c_opp \ Nei(p)| with early exit once the running count exceeds cap.
int non_neighbor_count(const std::vector<int>& c_opp, const std::vector<int>& nbrs,
                       int cap) {
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < c_opp.size()) {
    if (j == nbrs.size() || c_opp[i] < nbrs[j]) {
      if (++count > cap) return count;
      ++i;
    } else if (nbrs[j] < c_opp[i]) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> union3_sorted(const std::vector<int>& a, const std::vector<int>& b,
                               const std::vector<int>& c) {
  std::vector<int> ab;
  ab.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ab));
  std::vector<int> out;
  out.reserve(ab.size() + c.size());
  std::merge(ab.begin(), ab.end(), c.begin(), c.end(), std::back_inserter(out));
  return out;
}

void sorted_insert(std::vector<int>& v, int value) {
  v.insert(std::lower_bound(v.begin(), v.end(), value), value);
}

void sorted_erase(std::vector<int>& v, int value) {
  auto it = std::lower_bound(v.begin(), v.end(), value);
  assert(it != v.end() && *it == value);
  v.erase(it);
}

struct Enumerator {
  const BipartiteGraph& g;
  const MbeOptions& opts;
  PostorderObserver* observer;
  MbeTree tree;
  int alpha = 0;  // 0 disables threshold tracking
  int beta = 0;

  Enumerator(const BipartiteGraph& graph, const MbeOptions& options,
             PostorderObserver* obs)
      : g(graph), opts(options), observer(obs) {
    tree.n_u = g.n_u;
    tree.n_v = g.n_v;
    tree.index_u.assign(static_cast<std::size_t>(g.n_u), {});
    tree.index_v.assign(static_cast<std::size_t>(g.n_v), {});
    if (opts.ab) {
      alpha = opts.ab->alpha;
      beta = opts.ab->beta;
      tree.ab = opts.ab;
    }
    if (opts.retain_tree) tree.root = std::make_unique<MbeNode>();
  }

  const std::vector<int>& nbrs(Side side, int w) const {
    return side == Side::U ? g.adj_u[static_cast<std::size_t>(w)]
                           : g.adj_v[static_cast<std::size_t>(w)];
  }

  int emit(const std::vector<int>& r_u, const std::vector<int>& r_v) {
    int id = static_cast<int>(tree.bicliques.size());
    tree.bicliques.push_back(Biclique{r_u, r_v});
    for (int x : r_u) tree.index_u[static_cast<std::size_t>(x)].push_back(id);
    for (int y : r_v) tree.index_v[static_cast<std::size_t>(y)].push_back(id);
    return id;
  }

  void run() {
    std::vector<int> order = two_hop_order(g);
    if (opts.reverse_order) std::reverse(order.begin(), order.end());
    std::vector<int> r_u, r_v;
    std::vector<int> c_u(order.begin(), order.end());
    std::sort(c_u.begin(), c_u.end());
    std::vector<int> c_v(static_cast<std::size_t>(g.n_v));
    for (int v = 0; v < g.n_v; ++v) c_v[static_cast<std::size_t>(v)] = v;
    std::vector<int> x_u, x_v;
    std::vector<VertexId> branches;
    branches.reserve(order.size());
    for (int u : order) branches.push_back(VertexId{Side::U, u});
    ++tree.enum_nodes;  // root
    expand(r_u, r_v, c_u, c_v, x_u, x_v, branches, tree.root.get(), false, false);
  }

  // Expands one node whose branch list is already fixed, moving each branch
  // vertex from candidates to exclusion as it is processed. Returns the
  // number of bicliques emitted in the subtree.
  std::uint64_t expand(std::vector<int>& r_u, std::vector<int>& r_v,
                       std::vector<int>& c_u, std::vector<int>& c_v,
                       std::vector<int>& x_u, std::vector<int>& x_v,
                       const std::vector<VertexId>& branches, MbeNode* self,
                       bool self_is_ab, bool has_ab_ancestor) {
    std::uint64_t emitted = 0;
    for (VertexId w : branches) {
      std::vector<int>& c_same = w.side == Side::U ? c_u : c_v;
      std::vector<int>& x_same = w.side == Side::U ? x_u : x_v;
      const std::vector<int>& wn = nbrs(w.side, w.index);
      std::vector<int> child_c_u, child_c_v, child_x_u, child_x_v;
      if (w.side == Side::U) {
        child_c_u = c_u;
        sorted_erase(child_c_u, w.index);
        child_x_u = x_u;
        child_c_v = intersect_sorted(c_v, wn);
        child_x_v = intersect_sorted(x_v, wn);
      } else {
        child_c_v = c_v;
        sorted_erase(child_c_v, w.index);
        child_x_v = x_v;
        child_c_u = intersect_sorted(c_u, wn);
        child_x_u = intersect_sorted(x_u, wn);
      }
      std::vector<int>& r_same = w.side == Side::U ? r_u : r_v;
      sorted_insert(r_same, w.index);
      bool child_ab = alpha > 0 && !has_ab_ancestor && !self_is_ab &&
                      static_cast<int>(r_u.size()) >= alpha &&
                      static_cast<int>(r_v.size()) >= beta;
      MbeNode* child = nullptr;
      if (self) {
        auto node = std::make_unique<MbeNode>();
        node->edge_side = w.side;
        node->edge_vertex = w.index;
        node->ab_node = child_ab;
        child = node.get();
        self->children.push_back(std::move(node));
      }
      std::uint64_t sub =
          enter(r_u, r_v, std::move(child_c_u), std::move(child_c_v),
                std::move(child_x_u), std::move(child_x_v), child, child_ab,
                has_ab_ancestor || self_is_ab);
      emitted += sub;
      if (self && sub == 0) self->children.pop_back();  // virtual branch
      sorted_erase(r_same, w.index);
      sorted_erase(c_same, w.index);
      sorted_insert(x_same, w.index);
    }
    return emitted;
  }

  std::uint64_t enter(std::vector<int>& r_u, std::vector<int>& r_v,
                      std::vector<int> c_u, std::vector<int> c_v,
                      std::vector<int> x_u, std::vector<int> x_v, MbeNode* self,
                      bool self_is_ab, bool has_ab_ancestor) {
    ++tree.enum_nodes;
    std::uint64_t emitted = 0;
    int leaf_id = -1;
    if (c_u.empty() && c_v.empty()) {
      if (x_u.empty() && x_v.empty() && !r_u.empty() && !r_v.empty()) {
        leaf_id = emit(r_u, r_v);
        if (self) self->biclique_id = leaf_id;
        emitted = 1;
      }
    } else {
      std::vector<VertexId> branches;
      if (opts.use_pivot) {
        branches = select_pivot(g, c_u, c_v, x_u, x_v).branches;
      } else {
        for (int u : c_u) branches.push_back(VertexId{Side::U, u});
        for (int v : c_v) branches.push_back(VertexId{Side::V, v});
      }
      emitted = expand(r_u, r_v, c_u, c_v, x_u, x_v, branches, self, self_is_ab,
                       has_ab_ancestor);
    }
    if (observer && (emitted > 0 || self_is_ab)) {
      PostorderObserver::NodeView view;
      view.node = emitted > 0 ? self : nullptr;
      view.root = tree.root.get();
      view.is_real = emitted > 0;
      view.ab_node = self_is_ab;
      view.has_ab_ancestor = has_ab_ancestor;
      view.leaf_biclique_id = leaf_id;
      view.r_u = &r_u;
      view.r_v = &r_v;
      if (self_is_ab) {
        // C/X only migrate between each other below this node, so the unions
        // still equal the node's defining sets.
        view.rcx_u = union3_sorted(r_u, c_u, x_u);
        view.rcx_v = union3_sorted(r_v, c_v, x_v);
      }
      observer->on_node_complete(view);
    }
    return emitted;
  }
};

}  // namespace

PivotResult select_pivot(const BipartiteGraph& g, const std::vector<int>& c_u,
                         const std::vector<int>& c_v, const std::vector<int>& x_u,
                         const std::vector<int>& x_v) {
  assert(!c_u.empty() || !c_v.empty());
  int best_count = std::numeric_limits<int>::max();
  Side best_side = Side::U;
  int best_vertex = -1;
  bool best_excluded = false;
  // Groups in tie-break order: excluded before candidate, U before V,
  // then lowest index. The first zero within a group cannot be beaten.
  struct Group {
    const std::vector<int>* vertices;
    Side side;
    bool excluded;
  };
  const Group groups[4] = {{&x_u, Side::U, true},
                           {&x_v, Side::V, true},
                           {&c_u, Side::U, false},
                           {&c_v, Side::V, false}};
  for (const Group& group : groups) {
    const std::vector<int>& c_opp = group.side == Side::U ? c_v : c_u;
    for (int p : *group.vertices) {
      const std::vector<int>& nbrs = group.side == Side::U
                                         ? g.adj_u[static_cast<std::size_t>(p)]
                                         : g.adj_v[static_cast<std::size_t>(p)];
      int count = non_neighbor_count(c_opp, nbrs, best_count);
      if (count < best_count) {
        best_count = count;
        best_side = group.side;
        best_vertex = p;
        best_excluded = group.excluded;
        if (count == 0) break;
      }
    }
    if (best_count == 0) break;
  }
  PivotResult result;
  result.pivot = VertexId{best_side, best_vertex};
  const std::vector<int>& c_opp = best_side == Side::U ? c_v : c_u;
  const std::vector<int>& nbrs = best_side == Side::U
                                     ? g.adj_u[static_cast<std::size_t>(best_vertex)]
                                     : g.adj_v[static_cast<std::size_t>(best_vertex)];
  if (!best_excluded) result.branches.push_back(result.pivot);
  Side opp_side = best_side == Side::U ? Side::V : Side::U;
  for (int w : sorted_difference(c_opp, nbrs))
    result.branches.push_back(VertexId{opp_side, w});
  return result;
}

MbeTree enumerate_maximal_bicliques(const BipartiteGraph& g, const MbeOptions& opts,
                                    PostorderObserver* observer) {
  if (opts.ab && (opts.ab->alpha < 1 || opts.ab->beta < 1))
    throw std::invalid_argument("enumerate_maximal_bicliques: thresholds must be >= 1");
  Enumerator enumerator(g, opts, observer);
  enumerator.run();
  return std::move(enumerator.tree);
}

std::vector<int> filter_by_size(const std::vector<Biclique>& bicliques, int alpha,
                                int beta) {
  std::vector<int> ids;
  for (std::size_t i = 0; i < bicliques.size(); ++i) {
    const Biclique& b = bicliques[i];
    if (static_cast<int>(b.xs.size()) >= alpha &&
        static_cast<int>(b.ys.size()) >= beta)
      ids.push_back(static_cast<int>(i));
  }
  return ids;
}

std::vector<int> filter_by_size(const MbeTree& tree, int alpha, int beta) {
  return filter_by_size(tree.bicliques, alpha, beta);
}

}  // namespace bcpc
