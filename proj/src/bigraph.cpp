#include "bcpc/bigraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace bcpc {

ParseError::ParseError(const std::string& msg, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

const std::vector<int>& BipartiteGraph::neighbors_u(int u) const {
  if (u < 0 || u >= n_u) throw std::out_of_range("neighbors_u: vertex out of range");
  return adj_u[static_cast<std::size_t>(u)];
}

const std::vector<int>& BipartiteGraph::neighbors_v(int v) const {
  if (v < 0 || v >= n_v) throw std::out_of_range("neighbors_v: vertex out of range");
  return adj_v[static_cast<std::size_t>(v)];
}

const std::vector<int>& BipartiteGraph::neighbors(VertexId x) const {
  return x.side == Side::U ? neighbors_u(x.index) : neighbors_v(x.index);
}

BipartiteGraph from_edges(int n_u, int n_v,
                          const std::vector<std::pair<int, int>>& edges) {
  BipartiteGraph g;
  g.n_u = n_u;
  g.n_v = n_v;
  g.adj_u.assign(static_cast<std::size_t>(n_u), {});
  g.adj_v.assign(static_cast<std::size_t>(n_v), {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_u || v < 0 || v >= n_v)
      throw std::out_of_range("from_edges: endpoint out of range");
    g.adj_u[static_cast<std::size_t>(u)].push_back(v);
  }
  for (auto& nbrs : g.adj_u) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  for (int u = 0; u < n_u; ++u)
    for (int v : g.adj_u[static_cast<std::size_t>(u)])
      g.adj_v[static_cast<std::size_t>(v)].push_back(u);
  g.m = 0;
  for (const auto& nbrs : g.adj_u) g.m += nbrs.size();
  return g;
}

BipartiteGraph load_edge_list(std::istream& in, bool swap_sides) {
  std::unordered_map<long long, int> label_u, label_v;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  std::size_t line_no = 0;
  auto intern = [](std::unordered_map<long long, int>& table, long long label) {
    auto [it, inserted] = table.emplace(label, static_cast<int>(table.size()));
    return it->second;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '%' || line[start] == '#') continue;
    std::istringstream fields(line);
    long long a = 0, b = 0;
    if (!(fields >> a >> b)) throw ParseError("expected two integer tokens", line_no);
    std::string rest;
    if (fields >> rest) throw ParseError("trailing token '" + rest + "'", line_no);
    if (a < 0 || b < 0) throw ParseError("negative vertex label", line_no);
    if (swap_sides) std::swap(a, b);
    edges.emplace_back(intern(label_u, a), intern(label_v, b));
  }
  return from_edges(static_cast<int>(label_u.size()), static_cast<int>(label_v.size()), edges);
}

BipartiteGraph load_edge_list_file(const std::string& path, bool swap_sides) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_edge_list(in, swap_sides);
}

void write_edge_list(std::ostream& out, const BipartiteGraph& g) {
  // Emit edges so each side introduces its vertices in index order: the
  // smallest edge whose endpoints lie within the introduced prefixes is
  // always next. Reloading such a stream reassigns identical indices.
  std::vector<std::size_t> next(static_cast<std::size_t>(g.n_u), 0);
  std::size_t remaining = g.m;
  int iu = 0, iv = 0;  // next index each side would introduce
  while (remaining > 0) {
    int pick = -1;
    int upper = std::min(iu, g.n_u - 1);
    for (int u = 0; u <= upper; ++u) {
      const auto& nbrs = g.adj_u[static_cast<std::size_t>(u)];
      std::size_t i = next[static_cast<std::size_t>(u)];
      if (i < nbrs.size() && nbrs[i] <= iv) {
        pick = u;
        break;
      }
    }
    if (pick < 0)
      throw std::invalid_argument(
          "write_edge_list: indices do not follow any edge-stream appearance order");
    int v = g.adj_u[static_cast<std::size_t>(pick)][next[static_cast<std::size_t>(pick)]];
    ++next[static_cast<std::size_t>(pick)];
    --remaining;
    out << pick << ' ' << v << '\n';
    iu = std::max(iu, pick + 1);
    iv = std::max(iv, v + 1);
  }
}

std::vector<int> two_hop_degrees(const BipartiteGraph& g) {
  std::vector<int> degree(static_cast<std::size_t>(g.n_u), 0);
  std::vector<int> stamp(static_cast<std::size_t>(g.n_u), -1);
  for (int u = 0; u < g.n_u; ++u) {
    int count = 0;
    for (int v : g.adj_u[static_cast<std::size_t>(u)]) {
      for (int w : g.adj_v[static_cast<std::size_t>(v)]) {
        if (w != u && stamp[static_cast<std::size_t>(w)] != u) {
          stamp[static_cast<std::size_t>(w)] = u;
          ++count;
        }
      }
    }
    degree[static_cast<std::size_t>(u)] = count;
  }
  return degree;
}

std::vector<int> two_hop_order(const BipartiteGraph& g) {
  std::vector<int> degree = two_hop_degrees(g);
  std::vector<int> order(static_cast<std::size_t>(g.n_u));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return degree[static_cast<std::size_t>(a)] < degree[static_cast<std::size_t>(b)];
  });
  return order;
}

}  // namespace bcpc
