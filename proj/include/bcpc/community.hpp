#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bcpc/biclique.hpp"
#include "bcpc/mbe.hpp"
#include "bcpc/union_find.hpp"

namespace bcpc {

/// Counters shared by all detection algorithms. tree_nodes counts the
/// maximal-biclique search nodes for the adjacency-graph family and the
/// (alpha,beta)-enumeration nodes for the listing family.
struct RunStats {
  std::uint64_t n_biclique = 0;
  std::uint64_t filtered = 0;
  std::uint64_t pbcpc = 0;
  std::uint64_t pbcpc_plus = 0;
  std::uint64_t bcpc = 0;
  std::uint64_t tree_nodes = 0;
  std::uint64_t adjacency_tests = 0;
  std::uint64_t unions = 0;
  double wall_ms = 0.0;
};

/// Outcome of one detection run: the filtered maximal bicliques together
/// with their community assignment and run counters.
struct CommunityResult {
  int alpha = 1;
  int beta = 1;
  std::vector<Biclique> bicliques;  // all maximal bicliques, emission order
  std::vector<int> filtered_ids;
  DisjointSets assignment;          // over all biclique ids
  RunStats stats;

  /// Filtered ids grouped by community; members ascending, groups ordered by
  /// smallest member biclique in canonical order.
  std::vector<std::vector<int>> community_ids() const;

  /// Communities as canonical bicliques, members and groups both in
  /// canonical (lexicographic vertex-sequence) order. Comparable across
  /// algorithms and with the reference partition.
  std::vector<std::vector<Biclique>> communities() const;
};

/// Canonicalize an arbitrary partition of bicliques for comparisons.
std::vector<std::vector<Biclique>> canonical_partition(
    std::vector<std::vector<Biclique>> parts);

/// One community per line: member strings sorted, joined by " ; ".
void write_communities(std::ostream& out,
                       const std::vector<std::vector<Biclique>>& communities);

/// One canonical biclique per line, lines sorted.
void write_bicliques(std::ostream& out, const std::vector<Biclique>& bicliques);

/// Flat JSON object with a fixed key order.
void write_stats(std::ostream& out, const RunStats& stats);

}  // namespace bcpc
