#include <doctest.h>

#include <algorithm>
#include <random>

#include "bcpc/gen.hpp"
#include "bcpc/mbag.hpp"
#include "bcpc/oracle.hpp"
#include "helpers.hpp"

using namespace bcpc;

TEST_CASE("adjacency predicate") {
  Biclique b1{{0, 1}, {0, 1, 2}};
  Biclique b2{{0, 1, 2}, {1, 2}};
  Biclique b3{{1, 2}, {1, 2, 3}};
  CHECK(adjacent(b1, b2, 2, 2));
  CHECK(adjacent(b2, b1, 2, 2));
  CHECK_FALSE(adjacent(b1, b3, 2, 2));  // only u1 is shared
  CHECK(adjacent(b1, b1, 2, 3));
  CHECK_FALSE(adjacent(b1, b1, 3, 1));
}

TEST_CASE("adjacency is symmetric on random pairs") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    auto random_sorted = [&](int n) {
      std::vector<int> out;
      for (int i = 0; i < n; ++i)
        if (rng() % 2) out.push_back(i);
      return out;
    };
    Biclique a{random_sorted(8), random_sorted(8)};
    Biclique b{random_sorted(8), random_sorted(8)};
    for (int alpha = 1; alpha <= 3; ++alpha)
      for (int beta = 1; beta <= 3; ++beta)
        CHECK(adjacent(a, b, alpha, beta) == adjacent(b, a, alpha, beta));
  }
}

TEST_CASE("neighbor candidates via the inverted index") {
  MbeTree tree = enumerate_maximal_bicliques(test::middle_subgraph());
  std::vector<int> kept = filter_by_size(tree, 2, 2);
  std::vector<char> mask(tree.bicliques.size(), 0);
  for (int id : kept) mask[static_cast<std::size_t>(id)] = 1;
  for (int id : kept) {
    std::vector<int> cands = neighbor_candidates(tree, id, mask);
    // Every filtered biclique of this graph shares a vertex with the others.
    CHECK(cands.size() == 2);
    CHECK(std::find(cands.begin(), cands.end(), id) == cands.end());
    CHECK(std::is_sorted(cands.begin(), cands.end()));
  }

  MbeTree blocks = enumerate_maximal_bicliques(test::two_disjoint_blocks(2));
  std::vector<char> all(blocks.bicliques.size(), 1);
  for (std::size_t b = 0; b < blocks.bicliques.size(); ++b)
    CHECK(neighbor_candidates(blocks, static_cast<int>(b), all).empty());
}

TEST_CASE("baseline detection on the worked example") {
  CommunityResult r = detect_mbag(test::middle_subgraph(), 2, 2);
  CHECK(r.stats.n_biclique == 4);
  CHECK(r.stats.filtered == 3);
  CHECK(r.stats.bcpc == 1);
  auto parts = r.communities();
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == std::vector<Biclique>{Biclique{{0, 1}, {0, 1, 2}},
                                          Biclique{{0, 1, 2}, {1, 2}},
                                          Biclique{{1, 2}, {1, 2, 3}}});
}

TEST_CASE("disjoint blocks stay separate communities") {
  CommunityResult r = detect_mbag(test::two_disjoint_blocks(3), 2, 2);
  CHECK(r.stats.bcpc == 2);
  for (const auto& part : r.communities()) CHECK(part.size() == 1);
}

TEST_CASE("baseline partition equals the oracle on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    BipartiteGraph g = gen_random(8, 8, 0.4, seed);
    for (int alpha = 1; alpha <= 3; ++alpha)
      for (int beta = 1; beta <= 3; ++beta)
        CHECK(detect_mbag(g, alpha, beta).communities() ==
              oracle_bcpc(g, alpha, beta));
  }
}

TEST_CASE("partition is invariant under the pair-processing order") {
  std::mt19937 rng(321);
  for (std::uint64_t seed = 50; seed < 56; ++seed) {
    BipartiteGraph g = gen_random(8, 8, 0.45, seed);
    MbeTree tree = enumerate_maximal_bicliques(g);
    std::vector<int> kept = filter_by_size(tree, 2, 2);
    std::vector<char> mask(tree.bicliques.size(), 0);
    for (int id : kept) mask[static_cast<std::size_t>(id)] = 1;

    // Gather every adjacency test order-independently, then replay shuffled.
    std::vector<std::pair<int, int>> pairs;
    for (int b : kept)
      for (int c : neighbor_candidates(tree, b, mask))
        if (c > b) pairs.emplace_back(b, c);
    CommunityResult reference = detect_mbag(g, 2, 2);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(pairs.begin(), pairs.end(), rng);
      DisjointSets uf(static_cast<int>(tree.bicliques.size()));
      for (auto [b, c] : pairs)
        if (adjacent(tree.bicliques[static_cast<std::size_t>(b)],
                     tree.bicliques[static_cast<std::size_t>(c)], 2, 2))
          uf.unite(b, c);
      CommunityResult shuffled;
      shuffled.alpha = 2;
      shuffled.beta = 2;
      shuffled.bicliques = tree.bicliques;
      shuffled.filtered_ids = kept;
      shuffled.assignment = std::move(uf);
      CHECK(shuffled.communities() == reference.communities());
    }
  }
}

TEST_CASE("empty graph yields an empty result") {
  CommunityResult r = detect_mbag(from_edges(0, 0, {}), 2, 2);
  CHECK(r.stats.bcpc == 0);
  CHECK(r.communities().empty());
}
