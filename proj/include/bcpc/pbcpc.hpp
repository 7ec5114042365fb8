#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "bcpc/community.hpp"
#include "bcpc/mbe.hpp"
#include "bcpc/union_find.hpp"

namespace bcpc {

/// Union-find over biclique ids after the partial-community phase. Every
/// merge performed joins bicliques known to share an (alpha,beta)-biclique,
/// so each set is a subset of one final community.
struct PartialState {
  DisjointSets uf;
  std::uint64_t partial_sets = 0;    // sets among filtered ids
  std::uint64_t nodes_visited = 0;   // tree nodes touched while merging
};

/// Merge, for every stored threshold node, all maximal bicliques in its
/// subtree. Requires a tree retained with ab_node flags for (alpha,beta).
PartialState compute_partial_basic(const MbeTree& tree, int alpha, int beta);

/// Labels gathered by the subtree step of the postorder pass: the node's own
/// biclique for a leaf, otherwise the stop-labels of its children. Throws if
/// a non-leaf child has no stop-label yet.
std::vector<int> collect_subtree_labels(const MbeNode& node);

/// One interleaved enumeration + postorder pass: builds the retained tree
/// and merges, for every threshold node (stored or virtual), all maximal
/// bicliques sharing its chosen sets, using stop-labels to cut searches
/// short.
struct PartialPlusRun {
  MbeTree tree;
  PartialState state;
};
PartialPlusRun run_partial_plus(const BipartiteGraph& g, int alpha, int beta,
                                bool reverse_order = false);

/// Finish a detection run: adjacency pass over pairs still in different
/// sets, then community assembly. The final partition matches detect_mbag.
CommunityResult traverse_reduced_mbag(const MbeTree& tree, int alpha, int beta,
                                      PartialState state);

/// Detection via subtree partial merges, then the reduced adjacency pass.
CommunityResult detect_pbcpc(const BipartiteGraph& g, int alpha, int beta);

/// Detection via the postorder/stop-label partial merges, then the reduced
/// adjacency pass.
CommunityResult detect_pbcpc_plus(const BipartiteGraph& g, int alpha, int beta);

}  // namespace bcpc
