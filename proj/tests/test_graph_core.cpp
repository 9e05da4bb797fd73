#include <doctest.h>

#include <algorithm>
#include <random>

#include "satspec/blocks.hpp"
#include "satspec/constructions.hpp"
#include "satspec/graph.hpp"
#include "test_util.hpp"

using namespace satspec;

TEST_CASE("from_edges basics") {
  auto k3 = SimpleGraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(k3.n() == 3);
  CHECK(k3.edge_count() == 3);

  auto empty4 = SimpleGraph::from_edges(4, {});
  CHECK(empty4.edge_count() == 0);

  // duplicates collapse
  auto dup = SimpleGraph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);

  // S_{6,3} from its explicit edge list
  auto s63 = SimpleGraph::from_edges(6, {{0, 1}, {0, 2}, {1, 2},
                                         {0, 3}, {0, 4}, {0, 5},
                                         {1, 3}, {1, 4}, {1, 5},
                                         {2, 3}, {2, 4}, {2, 5}});
  CHECK(s63.edge_count() == 12);

  CHECK_THROWS_AS(SimpleGraph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph::from_edges(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph(63), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph(-1), std::invalid_argument);
}

TEST_CASE("degree classes") {
  auto s63 = star_join(6, 3);
  auto dc = degree_classes(s63);
  CHECK(dc.dominating == std::vector<int>{0, 1, 2});
  CHECK(dc.by_degree[3] == std::vector<int>{3, 4, 5});
  CHECK(dc.min_degree == 3);

  auto c5 = testutil::cycle_graph(5);
  auto dc5 = degree_classes(c5);
  CHECK(dc5.by_degree[2].size() == 5);
  CHECK(dc5.min_degree == 2);
  CHECK(dc5.dominating.empty());

  auto w6 = wheel(6);
  auto dcw = degree_classes(w6);
  CHECK(dcw.dominating == std::vector<int>{0});
  CHECK(dcw.by_degree[3] == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("star join shape") {
  // |X(S_{n,t})| = t and S_{n,t} - X is edgeless
  for (int n = 4; n <= 10; ++n) {
    for (int t = 1; t <= n - 2; ++t) {
      auto s = star_join(n, t);
      auto dc = degree_classes(s);
      CHECK(static_cast<int>(dc.dominating.size()) == t);
      uint64_t rest = s.vertex_mask() & ~((uint64_t{1} << t) - 1);
      CHECK(s.induced(rest).edge_count() == 0);
    }
  }
}

TEST_CASE("blocks: path, wheel, star of blocks") {
  auto p3 = testutil::path_graph(3);
  auto d = blocks(p3);
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0].trivial);
  CHECK(d.blocks[1].trivial);
  CHECK(d.cut_vertices == std::vector<int>{1});

  auto w6 = wheel(6);
  auto dw = blocks(w6);
  REQUIRE(dw.blocks.size() == 1);
  CHECK_FALSE(dw.blocks[0].trivial);
  CHECK(dw.blocks[0].vertices.size() == 6);
  CHECK(dw.cut_vertices.empty());
  CHECK(is_biconnected(w6));

  // K5 with two pendant edges at the same vertex
  auto g = SimpleGraph::from_edges(
      7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
          {0, 5}, {0, 6}});
  auto dg = blocks(g);
  CHECK(dg.blocks.size() == 3);
  CHECK(dg.nontrivial_count() == 1);
  CHECK(dg.cut_vertices == std::vector<int>{0});
}

TEST_CASE("blocks partition the edges") {
  std::mt19937 rng(12345);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 2 + static_cast<int>(rng() % 10);
    auto g = testutil::random_graph(rng, n, 0.35);
    auto d = blocks(g);
    int total = 0;
    for (const auto& b : d.blocks) {
      uint64_t mask = 0;
      for (int v : b.vertices) mask |= uint64_t{1} << v;
      total += g.induced(mask).edge_count();
    }
    CHECK(total == g.edge_count());
    // a non-cut vertex with an incident edge appears in exactly one block
    for (int v = 0; v < n; ++v) {
      bool cut = std::find(d.cut_vertices.begin(), d.cut_vertices.end(), v) != d.cut_vertices.end();
      int appearances = 0;
      for (const auto& b : d.blocks) {
        if (std::find(b.vertices.begin(), b.vertices.end(), v) != b.vertices.end()) ++appearances;
      }
      if (cut) {
        CHECK(appearances >= 2);
      } else {
        CHECK(appearances == (g.degree(v) > 0 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("connectivity helpers") {
  CHECK(is_connected(SimpleGraph(1)));
  CHECK(is_connected(SimpleGraph(0)));
  CHECK_FALSE(is_connected(SimpleGraph(2)));
  CHECK(is_tree(testutil::path_graph(5)));
  CHECK(is_forest(SimpleGraph(4)));
  CHECK_FALSE(is_forest(testutil::cycle_graph(4)));
  CHECK(component_count(SimpleGraph(3)) == 3);
}
