#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "bcpc/biclique.hpp"
#include "bcpc/bigraph.hpp"

namespace bcpc {

/// Size thresholds for one detection run.
struct AbParams {
  int alpha = 1;
  int beta = 1;
};

/// Retained node of the maximal-biclique search tree. Only real nodes are
/// kept: every stored node either is a zero-exclusion leaf (biclique_id set)
/// or has at least one stored descendant that is. Children appear in
/// creation order.
struct MbeNode {
  Side edge_side = Side::U;
  int edge_vertex = -1;   // vertex that spawned this node from its parent
  int biclique_id = -1;   // >= 0 iff zero-exclusion leaf
  bool ab_node = false;   // first node on its root path with |R_U| >= alpha and |R_V| >= beta
  int stop_label = -1;    // representative biclique id, set during postorder
  std::vector<std::unique_ptr<MbeNode>> children;

  bool is_leaf() const { return children.empty(); }
};

/// Result of one maximal-biclique enumeration: the bicliques in emission
/// order, a per-vertex inverted index, and (optionally) the real-node
/// skeleton of the search tree. Immutable and shareable once built.
struct MbeTree {
  int n_u = 0;
  int n_v = 0;
  std::unique_ptr<MbeNode> root;            // null unless retain_tree
  std::vector<Biclique> bicliques;          // emission order
  std::vector<std::vector<int>> index_u;    // U vertex -> ascending biclique ids
  std::vector<std::vector<int>> index_v;    // V vertex -> ascending biclique ids
  std::uint64_t enum_nodes = 0;             // search-tree nodes entered
  std::optional<AbParams> ab;               // thresholds the ab_node flags refer to
};

struct MbeOptions {
  bool retain_tree = false;
  std::optional<AbParams> ab;  // enables ab_node flags / observer threshold events
  bool use_pivot = true;       // disabled only to cross-check the plain framework
  bool reverse_order = false;  // process the first level in reversed order
};

/// Completion event fired for every real node and every virtual node that
/// crosses both size thresholds, in postorder, while the enumeration runs.
class PostorderObserver {
 public:
  struct NodeView {
    MbeNode* node = nullptr;      // stored node; null when not retained (virtual)
    MbeNode* root = nullptr;      // root of the tree built so far
    bool is_real = false;
    bool ab_node = false;
    bool has_ab_ancestor = false;
    int leaf_biclique_id = -1;    // >= 0 iff the node is a zero-exclusion leaf
    // Six-tuple unions of the completing node, per side, sorted.
    const std::vector<int>* r_u = nullptr;
    const std::vector<int>* r_v = nullptr;
    std::vector<int> rcx_u;       // R_U ∪ C_U ∪ X_U
    std::vector<int> rcx_v;
  };

  virtual ~PostorderObserver() = default;
  virtual void on_node_complete(const NodeView& view) = 0;
};

/// Chosen pivot and the branch vertices a node must expand: the pivot itself
/// (when it is a candidate, not an excluded vertex) followed by the
/// opposite-side candidates that are non-neighbors of the pivot.
struct PivotResult {
  VertexId pivot;
  std::vector<VertexId> branches;
};

/// Pick the vertex of X_U ∪ C_U / X_V ∪ C_V with the fewest non-neighbors in
/// the opposite candidate set. Ties prefer excluded vertices, then side U,
/// then the lowest index. Requires C_U ∪ C_V nonempty.
PivotResult select_pivot(const BipartiteGraph& g, const std::vector<int>& c_u,
                         const std::vector<int>& c_v, const std::vector<int>& x_u,
                         const std::vector<int>& x_v);

/// Enumerate every maximal biclique of g (both sides nonempty) exactly once.
/// The first recursion level processes U in two-hop order; deeper levels use
/// pivot pruning. The observer, when given, sees node completions interleaved
/// with the enumeration.
MbeTree enumerate_maximal_bicliques(const BipartiteGraph& g,
                                    const MbeOptions& opts = {},
                                    PostorderObserver* observer = nullptr);

/// Ids of bicliques with |X| >= alpha and |Y| >= beta.
std::vector<int> filter_by_size(const std::vector<Biclique>& bicliques, int alpha,
                                int beta);
std::vector<int> filter_by_size(const MbeTree& tree, int alpha, int beta);

}  // namespace bcpc
