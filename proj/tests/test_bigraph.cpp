#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bcpc/bigraph.hpp"
#include "bcpc/gen.hpp"
#include "helpers.hpp"

using namespace bcpc;
using test::from_text;

TEST_CASE("load_edge_list handles empty input") {
  BipartiteGraph g = from_text("");
  CHECK(g.n_u == 0);
  CHECK(g.n_v == 0);
  CHECK(g.m == 0);
}

TEST_CASE("load_edge_list builds K2,2") {
  BipartiteGraph g = from_text("0 0\n0 1\n1 0\n1 1\n");
  CHECK(g.n_u == 2);
  CHECK(g.n_v == 2);
  CHECK(g.m == 4);
}

TEST_CASE("duplicate edges collapse") {
  BipartiteGraph g = from_text("0 0\n0 0\n0 1\n");
  CHECK(g.m == 2);
}

TEST_CASE("comments and blank lines are skipped, labels compact by first appearance") {
  BipartiteGraph g = from_text("% header\n# note\n\n5 9\n5 7\n3 9\n");
  CHECK(g.n_u == 2);
  CHECK(g.n_v == 2);
  CHECK(g.m == 3);
  // 5 -> u0, 3 -> u1; 9 -> v0, 7 -> v1
  CHECK(g.neighbors_u(0) == std::vector<int>{0, 1});
  CHECK(g.neighbors_u(1) == std::vector<int>{0});
}

TEST_CASE("malformed lines carry their line number") {
  auto require_line = [](const std::string& text, std::size_t line) {
    std::istringstream in(text);
    try {
      load_edge_list(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  require_line("0 0\n0\n", 2);
  require_line("a b\n", 1);
  require_line("0 0\n1 2 3\n", 2);
  require_line("-1 2\n", 1);
}

TEST_CASE("swap_sides reads columns as (v, u)") {
  BipartiteGraph g = from_text("0 0\n0 1\n0 2\n", true);
  CHECK(g.n_u == 3);
  CHECK(g.n_v == 1);
  CHECK(g.neighbors_v(0) == std::vector<int>{0, 1, 2});
}

TEST_CASE("neighbors queries") {
  BipartiteGraph g = test::k22();
  CHECK(g.neighbors_u(0) == std::vector<int>{0, 1});
  CHECK(g.neighbors(VertexId{Side::V, 1}) == std::vector<int>{0, 1});
  CHECK_THROWS_AS((void)g.neighbors_u(2), std::out_of_range);
  CHECK_THROWS_AS((void)g.neighbors_v(-1), std::out_of_range);

  BipartiteGraph mid = test::middle_subgraph();
  CHECK(mid.neighbors_u(2) == std::vector<int>{1, 2, 3});

  BipartiteGraph iso = from_edges(2, 1, {{0, 0}});
  CHECK(iso.neighbors_u(1).empty());
}

TEST_CASE("two_hop_order examples") {
  CHECK(two_hop_order(test::k22()) == std::vector<int>{0, 1});
  CHECK(two_hop_order(test::middle_subgraph()) == std::vector<int>{0, 1, 2});
  // u2 has a private neighbor, so it shares no 2-hop vertex and comes first.
  BipartiteGraph g = from_edges(3, 3, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 2}});
  CHECK(two_hop_order(g) == std::vector<int>{2, 0, 1});
}

TEST_CASE("two_hop_order is a permutation and degrees match a pairwise check") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    BipartiteGraph g = gen_random(9, 7, 0.3, seed);
    std::vector<int> order = two_hop_order(g);
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> iota(static_cast<std::size_t>(g.n_u));
    std::iota(iota.begin(), iota.end(), 0);
    CHECK(sorted == iota);

    std::vector<int> degrees = two_hop_degrees(g);
    for (int u = 0; u < g.n_u; ++u) {
      int expect = 0;
      for (int w = 0; w < g.n_u; ++w) {
        if (w == u) continue;
        bool shares = false;
        for (int v : g.neighbors_u(u))
          if (std::binary_search(g.neighbors_u(w).begin(), g.neighbors_u(w).end(), v))
            shares = true;
        if (shares) ++expect;
      }
      CHECK(degrees[static_cast<std::size_t>(u)] == expect);
    }
  }
}

TEST_CASE("round-trip through the canonical edge list") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    // Start from a loaded graph: indices then follow some appearance order.
    std::ostringstream raw;
    for (auto [u, v] : gen_random_edges(8, 8, 0.4, seed)) raw << u << ' ' << v << '\n';
    BipartiteGraph g = from_text(raw.str());
    std::ostringstream out;
    write_edge_list(out, g);
    BipartiteGraph back = from_text(out.str());
    CHECK(back.n_u == g.n_u);
    CHECK(back.n_v == g.n_v);
    CHECK(back.adj_u == g.adj_u);
    CHECK(back.adj_v == g.adj_v);
  }
  // Indices that no edge stream can introduce in order are rejected.
  BipartiteGraph crossed = from_edges(2, 2, {{0, 1}, {1, 0}});
  std::ostringstream out;
  CHECK_THROWS_AS(write_edge_list(out, crossed), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and sorted after every load") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    BipartiteGraph g = gen_random(10, 10, 0.5, seed);
    std::size_t m_u = 0, m_v = 0;
    for (int u = 0; u < g.n_u; ++u) {
      const auto& nbrs = g.neighbors_u(u);
      CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
      CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
      m_u += nbrs.size();
      for (int v : nbrs)
        CHECK(std::binary_search(g.neighbors_v(v).begin(), g.neighbors_v(v).end(), u));
    }
    for (int v = 0; v < g.n_v; ++v) {
      m_v += g.neighbors_v(v).size();
      for (int u : g.neighbors_v(v))
        CHECK(std::binary_search(g.neighbors_u(u).begin(), g.neighbors_u(u).end(), v));
    }
    CHECK(g.m == m_u);
    CHECK(g.m == m_v);
  }
}
