#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "mincut/generate.hpp"
#include "mincut/spanning_tree.hpp"
#include "testutil.hpp"

using namespace mincut;
using testutil::naive_path_edges;

namespace {

std::set<int> tree_edge_ids(const RootedTree& t) {
  return {t.edge_graph.begin(), t.edge_graph.end()};
}

// Positions covered by a set of intervals; checks disjointness on the way.
std::set<int> interval_positions(const std::vector<PosInterval>& ivs) {
  std::set<int> pos;
  for (const PosInterval& iv : ivs) {
    REQUIRE(iv.lo <= iv.hi);
    for (int p = iv.lo; p <= iv.hi; ++p) REQUIRE(pos.insert(p).second);
  }
  return pos;
}

void check_path_query(const RootedTree& t, const HldIndex& h, int u, int v) {
  std::vector<PosInterval> ivs = path_intervals(h, u, v);
  std::set<int> expect;
  for (int e : naive_path_edges(t, u, v)) expect.insert(h.position_of(e));
  CHECK(interval_positions(ivs) == expect);
  CHECK(static_cast<int>(ivs.size()) <= h.max_intervals());
}

}  // namespace

TEST_CASE("minimum_spanning_tree picks unique minimum") {
  std::vector<Edge> edges{{0, 1, 0}, {1, 2, 0}, {0, 2, 1}};
  RootedTree t = minimum_spanning_tree(3, edges);
  CHECK(tree_edge_ids(t) == std::set<int>{0, 1});
}

TEST_CASE("minimum_spanning_tree breaks ties by smallest edge id") {
  std::vector<Edge> edges{{0, 1, 5}, {0, 2, 5}, {0, 3, 5}, {1, 2, 5}, {1, 3, 5}, {2, 3, 5}};
  RootedTree t = minimum_spanning_tree(4, edges);
  CHECK(tree_edge_ids(t) == std::set<int>{0, 1, 2});
}

TEST_CASE("minimum_spanning_tree excludes the heaviest cycle edge") {
  std::vector<Edge> edges{{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 0, 4}};
  RootedTree t = minimum_spanning_tree(4, edges);
  CHECK(tree_edge_ids(t) == std::set<int>{0, 1, 2});
}

TEST_CASE("minimum_spanning_tree rejects disconnected input") {
  std::vector<Edge> edges{{0, 1, 1}, {2, 3, 1}};
  CHECK_THROWS_AS(minimum_spanning_tree(4, edges), MincutError);
}

TEST_CASE("minimum_spanning_tree matches a reference implementation by weight") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng.below(30));
    int m = std::min(n * (n - 1) / 2, n + static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * n))));
    Graph g = gen_random_m(n, m, 1, 50, rng.stream(trial));
    RootedTree t = minimum_spanning_tree(n, g.edges());
    double weight = 0;
    for (double w : t.edge_weight) weight += w;
    CHECK(weight == testutil::prim_mst_weight(n, g.edges()));
  }
}

TEST_CASE("rooted tree bookkeeping") {
  // Path 0-1-2-3 plus a branch 1-4.
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {1, 4}};
  RootedTree t = make_rooted_tree(5, edges, {}, {});
  CHECK(t.root == 0);
  CHECK(t.subtree_size[0] == 5);
  CHECK(t.subtree_size[1] == 4);
  CHECK(t.depth[3] == 3);
  CHECK(t.parent[4] == 1);
  int e12 = t.parent_edge[2];
  CHECK(t.below(e12, 3));
  CHECK_FALSE(t.below(e12, 4));
}

TEST_CASE("decompose lays a path graph out as one heavy path") {
  RootedTree t = testutil::path_tree(8);
  HldIndex h = decompose(t);
  CHECK(h.chain_count() == 1);
  // Root-to-leaf order: edge at position p is the one at depth p.
  for (int e = 0; e < t.edge_count(); ++e)
    CHECK(h.position_of(e) == t.depth[static_cast<std::size_t>(t.edge_child[static_cast<std::size_t>(e)])]);
  std::vector<PosInterval> ivs = path_intervals(h, 0, 7);
  REQUIRE(ivs.size() == 1);
  CHECK(ivs[0].lo == 1);
  CHECK(ivs[0].hi == 7);
}

TEST_CASE("decompose splits a star into singleton paths") {
  RootedTree t = testutil::star_tree(9);
  HldIndex h = decompose(t);
  CHECK(h.chain_count() == 8);
  std::vector<PosInterval> ivs = path_intervals(h, 3, 7);
  REQUIRE(ivs.size() == 2);
  CHECK(ivs[0].lo == ivs[0].hi);
  CHECK(ivs[1].lo == ivs[1].hi);
}

TEST_CASE("order is a permutation of 1..n-1 and chains are contiguous") {
  Rng rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng.below(120));
    Rng tr = rng.stream(trial);
    RootedTree t = testutil::random_tree(n, tr);
    HldIndex h = decompose(t);
    std::set<int> seen;
    for (int e = 0; e < t.edge_count(); ++e) {
      int p = h.position_of(e);
      REQUIRE(p >= 1);
      REQUIRE(p <= n - 1);
      REQUIRE(seen.insert(p).second);
      CHECK(h.edge_at(p) == e);
    }
    // Every chain occupies one contiguous block of positions, and every edge
    // belongs to the chain of its deeper endpoint.
    std::set<int> covered;
    for (int c = 0; c < h.chain_count(); ++c) {
      PosInterval span = h.chain_span(c);
      for (int p = span.lo; p <= span.hi; ++p) {
        REQUIRE(covered.insert(p).second);
        CHECK(h.chain_of_vertex(t.edge_child[static_cast<std::size_t>(h.edge_at(p))]) == c);
      }
    }
    CHECK(covered.size() == static_cast<std::size_t>(n - 1));
  }
}

TEST_CASE("balanced binary tree queries stay within the interval bound") {
  RootedTree t = testutil::binary_tree(15);
  HldIndex h = decompose(t);
  for (int u = 0; u < 15; ++u)
    for (int v = 0; v < 15; ++v)
      if (u != v) {
        std::vector<PosInterval> ivs = path_intervals(h, u, v);
        CHECK(static_cast<int>(ivs.size()) <= 8);  // 2 * ceil(log2 15)
        check_path_query(t, h, u, v);
      }
}

TEST_CASE("path_intervals matches the naive walker on random trees") {
  Rng rng(23);
  RootedTree t = testutil::random_tree(64, rng);
  HldIndex h = decompose(t);
  for (int u = 0; u < 64; ++u)
    for (int v = 0; v < 64; ++v) {
      if (u == v) {
        CHECK(path_intervals(h, u, v).empty());
        continue;
      }
      check_path_query(t, h, u, v);
    }
}

TEST_CASE("path_intervals on assorted tree shapes") {
  Rng rng(24);
  for (int n : {2, 3, 5, 17, 33, 100}) {
    for (int shape = 0; shape < 3; ++shape) {
      Rng tr = rng.stream(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(shape));
      RootedTree t = shape == 0   ? testutil::path_tree(n)
                     : shape == 1 ? testutil::star_tree(n)
                                  : testutil::random_tree(n, tr);
      HldIndex h = decompose(t);
      for (int probe = 0; probe < 40; ++probe) {
        int u = static_cast<int>(tr.below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(tr.below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        check_path_query(t, h, u, v);
      }
    }
  }
}

TEST_CASE("random_spanning_tree spans the graph deterministically per seed") {
  Rng rng(25);
  Graph g = gen_random_m(40, 100, 1, 4, rng);
  Rng r1(77), r2(77);
  RootedTree a = random_spanning_tree(g, r1);
  RootedTree b = random_spanning_tree(g, r2);
  CHECK(a.edge_graph == b.edge_graph);
  CHECK(a.vertex_count() == 40);
  CHECK(a.edge_count() == 39);
}
