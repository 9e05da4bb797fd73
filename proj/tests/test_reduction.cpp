#include <doctest.h>

#include <random>

#include "satspec/canonical.hpp"
#include "satspec/constructions.hpp"
#include "satspec/blocks.hpp"
#include "satspec/reduction.hpp"
#include "test_util.hpp"

using namespace satspec;

namespace {

// Test-local reducer applying suppressions in a random order, built on the
// public graph API rather than the library's workspace.  Labels shift after
// each deletion, so neighbor indices are recomputed on the current graph.
SimpleGraph random_order_minimal_base(SimpleGraph g, std::mt19937& rng) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> order = testutil::random_permutation(rng, g.n());
    for (int v : order) {
      if (v >= g.n()) continue;
      if (g.degree(v) == 1) {
        g = g.without_vertex(v);
        changed = true;
        break;
      }
      if (g.degree(v) == 2) {
        int u1 = -1, u2 = -1;
        for (int w = 0; w < g.n(); ++w) {
          if (!g.has_edge(v, w)) continue;
          (u1 < 0 ? u1 : u2) = w;
        }
        if (g.has_edge(u1, u2)) continue;
        int a = u1 - (u1 > v), b = u2 - (u2 > v);
        g = g.without_vertex(v).with_edge(a, b);
        changed = true;
        break;
      }
    }
  }
  return g;
}

}  // namespace

TEST_CASE("strip_leaves") {
  std::mt19937 rng(8);
  for (int n = 1; n <= 9; ++n) {
    auto t = strip_leaves(testutil::random_tree(rng, n));
    CHECK(t.output.n() == 1);  // every tree peels to a single vertex
    CHECK(t.output.edge_count() == 0);
  }

  // W6 plus one pendant edge strips back to W6
  auto w6p = wheel(6).with_new_vertex(uint64_t{1} << 3);
  auto t = strip_leaves(w6p);
  CHECK(t.steps.size() == 1);
  CHECK(t.steps[0].kind == ReductionStep::Kind::LeafDelete);
  CHECK(is_isomorphic(t.output, wheel(6)));

  auto wp = wheel_plus(6, 1);
  auto t2 = strip_leaves(wp);
  CHECK(t2.steps.empty());
  CHECK(t2.output == wp);

  // output never has degree-1 vertices
  for (int iter = 0; iter < 60; ++iter) {
    int n = 1 + static_cast<int>(rng() % 11);
    auto g = testutil::random_graph(rng, n, 0.25);
    auto tr = strip_leaves(g);
    for (int v = 0; v < tr.output.n(); ++v) CHECK(tr.output.degree(v) != 1);
    CHECK(replay_trace(tr) == tr.output);
  }
}

TEST_CASE("minimal_base") {
  for (int n = 3; n <= 9; ++n) {
    auto m = minimal_base(testutil::cycle_graph(n));
    CHECK(m.output.n() == 3);
    CHECK(m.output.edge_count() == 3);
  }

  // W_n^{+p} reduces to W_n^{+1}: the last path vertex survives because the
  // hub and its rim attachment are adjacent
  for (int n = 6; n <= 8; ++n) {
    for (int p = 1; p <= 3; ++p) {
      auto m = minimal_base(wheel_plus(n, p));
      CHECK(is_isomorphic(m.output, wheel_plus(n, 1)));
    }
  }

  auto w6 = wheel(6);
  auto m = minimal_base(w6);
  CHECK(m.steps.empty());
  CHECK(m.output == w6);

  // every degree-2 vertex in the output has adjacent neighbors
  std::mt19937 rng(17);
  for (int iter = 0; iter < 80; ++iter) {
    int n = 1 + static_cast<int>(rng() % 12);
    auto g = testutil::random_graph(rng, n, 0.3);
    auto tr = minimal_base(g);
    for (int v = 0; v < tr.output.n(); ++v) {
      CHECK(tr.output.degree(v) != 1);
      if (tr.output.degree(v) != 2) continue;
      int u1 = -1, u2 = -1;
      for (int w = 0; w < tr.output.n(); ++w) {
        if (!tr.output.has_edge(v, w)) continue;
        (u1 < 0 ? u1 : u2) = w;
      }
      CHECK(tr.output.has_edge(u1, u2));
    }
    CHECK(replay_trace(tr) == tr.output);
  }
}

TEST_CASE("reduction order independence") {
  std::mt19937 rng(23);
  std::vector<SimpleGraph> fixtures = {
      wheel_plus(6, 3), wheel(7), testutil::cycle_graph(9),
      star_join(8, 3),  testutil::random_graph(rng, 10, 0.25),
      testutil::random_graph(rng, 11, 0.2), testutil::random_graph(rng, 9, 0.35)};
  for (const auto& g : fixtures) {
    auto expected = canonical_form(minimal_base(g).output);
    for (int rep = 0; rep < 50; ++rep) {
      CHECK(canonical_form(random_order_minimal_base(g, rng)) == expected);
    }
  }
}

TEST_CASE("subdivide_edge") {
  auto k3 = complete_graph(3);
  auto c4 = subdivide_edge(k3, 0, 1);
  CHECK(is_isomorphic(c4, testutil::cycle_graph(4)));
  CHECK_THROWS_AS(subdivide_edge(testutil::path_graph(3), 0, 2), std::invalid_argument);

  std::mt19937 rng(5);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 3 + static_cast<int>(rng() % 8);
    auto g = testutil::random_graph(rng, n, 0.5);
    auto edges = g.edges();
    if (edges.empty()) continue;
    auto [u, v] = edges[rng() % edges.size()];
    auto h = subdivide_edge(g, u, v);
    CHECK(h.n() == g.n() + 1);
    CHECK(h.edge_count() == g.edge_count() + 1);
    CHECK(h.edge_count() - h.n() == g.edge_count() - g.n());
    CHECK(h.degree(g.n()) == 2);
  }

  // subdividing a hub-rim edge of W_n and adding back the chord gives W_n^{+1}
  for (int n = 6; n <= 9; ++n) {
    auto g0 = subdivide_edge(wheel(n), 0, 1).with_edge(0, 1);
    CHECK(is_isomorphic(g0, wheel_plus(n, 1)));
  }
}

TEST_CASE("is_subdivision_of") {
  CHECK(is_subdivision_of(testutil::cycle_graph(7), complete_graph(3)));
  CHECK(is_subdivision_of(wheel_plus(6, 2), wheel_plus(6, 1)));
  CHECK_FALSE(is_subdivision_of(complete_graph(4), complete_graph(3)));
  CHECK_FALSE(is_subdivision_of(testutil::cycle_graph(6), testutil::cycle_graph(7)));
  CHECK(is_subdivision_of(testutil::path_graph(5), testutil::path_graph(2)));

  std::mt19937 rng(99);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto g = testutil::random_graph(rng, n, 0.5);
    CHECK(is_subdivision_of(g, g));
    auto edges = g.edges();
    if (edges.empty()) continue;
    auto h = g;
    for (int step = 0; step < 3; ++step) {
      auto he = h.edges();
      auto [u, v] = he[rng() % he.size()];
      h = subdivide_edge(h, u, v);
    }
    CHECK(is_subdivision_of(h, g));
  }
}

TEST_CASE("conservation and base structure") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 150; ++iter) {
    int n = 1 + static_cast<int>(rng() % 12);
    auto g = testutil::random_graph(rng, n, 0.3);
    auto m0 = strip_leaves(g);
    auto m = minimal_base(g);
    CHECK(m0.output.edge_count() - m0.output.n() == g.edge_count() - g.n());
    CHECK(m.output.edge_count() - m.output.n() == g.edge_count() - g.n());
    CHECK(blocks(g).nontrivial_count() == blocks(m0.output).nontrivial_count());
    CHECK(blocks(g).nontrivial_count() == blocks(m.output).nontrivial_count());
    if (iter % 5 == 0 && m0.output.n() <= 10) {
      CHECK(is_subdivision_of(m0.output, m.output));
    }
  }

  // a graph with exactly one non-trivial block has a 2-connected minimal base
  auto g = wheel(6).with_new_vertex(uint64_t{1} << 2);
  g = g.with_new_vertex(uint64_t{1} << 6);
  auto m = minimal_base(g);
  CHECK(is_biconnected(m.output));
  CHECK(is_isomorphic(m.output, wheel(6)));
}
