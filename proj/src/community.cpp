#include "bcpc/community.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include <json.hpp>

namespace bcpc {

std::vector<std::vector<int>> CommunityResult::community_ids() const {
  std::map<int, std::vector<int>> by_root;
  DisjointSets uf = assignment;  // find() compresses paths
  for (int id : filtered_ids) by_root[uf.find(id)].push_back(id);
  std::vector<std::vector<int>> groups;
  groups.reserve(by_root.size());
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    groups.push_back(std::move(members));
  }
  auto least = [&](const std::vector<int>& group) -> const Biclique& {
    int best = group[0];
    for (int id : group)
      if (bicliques[static_cast<std::size_t>(id)] < bicliques[static_cast<std::size_t>(best)])
        best = id;
    return bicliques[static_cast<std::size_t>(best)];
  };
  std::sort(groups.begin(), groups.end(),
            [&](const auto& a, const auto& b) { return least(a) < least(b); });
  return groups;
}

std::vector<std::vector<Biclique>> CommunityResult::communities() const {
  std::vector<std::vector<Biclique>> out;
  for (const auto& group : community_ids()) {
    std::vector<Biclique> members;
    members.reserve(group.size());
    for (int id : group) members.push_back(bicliques[static_cast<std::size_t>(id)]);
    out.push_back(std::move(members));
  }
  return canonical_partition(std::move(out));
}

std::vector<std::vector<Biclique>> canonical_partition(
    std::vector<std::vector<Biclique>> parts) {
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

void write_communities(std::ostream& out,
                       const std::vector<std::vector<Biclique>>& communities) {
  for (const auto& community : communities) {
    for (std::size_t i = 0; i < community.size(); ++i) {
      if (i) out << " ; ";
      out << to_string(community[i]);
    }
    out << '\n';
  }
}

void write_bicliques(std::ostream& out, const std::vector<Biclique>& bicliques) {
  std::vector<Biclique> sorted = bicliques;
  std::sort(sorted.begin(), sorted.end());
  for (const Biclique& b : sorted) out << to_string(b) << '\n';
}

void write_stats(std::ostream& out, const RunStats& stats) {
  nlohmann::ordered_json j;
  j["n_biclique"] = stats.n_biclique;
  j["filtered"] = stats.filtered;
  j["pbcpc"] = stats.pbcpc;
  j["pbcpc_plus"] = stats.pbcpc_plus;
  j["bcpc"] = stats.bcpc;
  j["tree_nodes"] = stats.tree_nodes;
  j["adjacency_tests"] = stats.adjacency_tests;
  j["unions"] = stats.unions;
  j["wall_ms"] = stats.wall_ms;
  out << j.dump(2) << '\n';
}

}  // namespace bcpc
