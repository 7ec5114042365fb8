#include <doctest.h>

#include <cmath>
#include <queue>
#include <random>

#include "bcpc/union_find.hpp"

using namespace bcpc;

TEST_CASE("construction and singletons") {
  DisjointSets empty(0);
  CHECK(empty.count() == 0);

  DisjointSets s(5);
  CHECK(s.count() == 5);
  CHECK(s.find(3) == 3);

  DisjointSets one(1);
  CHECK_FALSE(one.unite(0, 0));
  CHECK(one.count() == 1);
}

TEST_CASE("unite merges and reports") {
  DisjointSets s(4);
  CHECK_FALSE(s.unite(0, 0));
  CHECK(s.unite(0, 1));
  CHECK(s.count() == 3);
  CHECK_FALSE(s.unite(0, 1));
  CHECK(s.find(0) == s.find(1));

  s.unite(1, 2);
  s.unite(2, 3);
  int root = s.find(0);
  for (int i = 1; i < 4; ++i) CHECK(s.find(i) == root);
}

TEST_CASE("out-of-range elements are rejected") {
  DisjointSets s(3);
  CHECK_THROWS_AS((void)s.find(3), std::out_of_range);
  CHECK_THROWS_AS((void)s.unite(0, -1), std::out_of_range);
}

TEST_CASE("add grows by singletons") {
  DisjointSets s(2);
  CHECK(s.add() == 2);
  CHECK(s.count() == 3);
  CHECK(s.find(2) == 2);
}

namespace {

// Components of the multigraph formed by the unite calls, by BFS.
std::vector<int> bfs_components(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [a, b] : pairs) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] != -1) continue;
    std::queue<int> queue;
    queue.push(start);
    comp[static_cast<std::size_t>(start)] = next;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop();
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (comp[static_cast<std::size_t>(y)] == -1) {
          comp[static_cast<std::size_t>(y)] = next;
          queue.push(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace

TEST_CASE("partition equals BFS components of the unite calls") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng() % 64);
    DisjointSets s(n);
    std::vector<std::pair<int, int>> pairs;
    int ops = static_cast<int>(rng() % 128);
    for (int i = 0; i < ops; ++i) {
      int a = static_cast<int>(rng() % static_cast<unsigned>(n));
      int b = static_cast<int>(rng() % static_cast<unsigned>(n));
      pairs.emplace_back(a, b);
      s.unite(a, b);
    }
    std::vector<int> comp = bfs_components(n, pairs);
    int classes = 1 + *std::max_element(comp.begin(), comp.end());
    CHECK(s.count() == classes);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        CHECK((s.find(a) == s.find(b)) ==
              (comp[static_cast<std::size_t>(a)] == comp[static_cast<std::size_t>(b)]));

    int max_rank = 0;
    for (int i = 0; i < n; ++i) max_rank = std::max(max_rank, s.rank_of(i));
    CHECK(max_rank <= static_cast<int>(std::log2(n)) + 1);

    for (int i = 0; i < n; ++i) CHECK(s.find(s.find(i)) == s.find(i));
  }
}
