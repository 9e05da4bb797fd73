#include <doctest.h>

#include <random>

#include "satspec/canonical.hpp"
#include "satspec/constructions.hpp"
#include "satspec/graph.hpp"
#include "test_util.hpp"

using namespace satspec;

TEST_CASE("canonical form is constant on orbits") {
  std::mt19937 rng(77);
  std::vector<SimpleGraph> fixtures = {
      testutil::cycle_graph(5),  wheel(6),          star_join(7, 3),
      wheel_plus(6, 2),          complete_graph(5), testutil::path_graph(6),
      SimpleGraph(5),            testutil::random_graph(rng, 9, 0.3),
      testutil::random_graph(rng, 10, 0.6)};
  for (const auto& g : fixtures) {
    auto base = canonical_form(g);
    for (int rep = 0; rep < 100; ++rep) {
      auto perm = testutil::random_permutation(rng, g.n());
      CHECK(canonical_form(relabel(g, perm)) == base);
    }
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  auto c4 = testutil::cycle_graph(4);
  auto k3_k1 = SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(canonical_form(c4) != canonical_form(k3_k1));

  // same degree sequence, different graphs
  auto c6 = testutil::cycle_graph(6);
  auto two_triangles = SimpleGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(is_isomorphic(c6, two_triangles));
  CHECK(is_isomorphic(c6, relabel(c6, {3, 2, 5, 0, 1, 4})));
}

TEST_CASE("canonical labeling reproduces the canonical graph") {
  std::mt19937 rng(31);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 1 + static_cast<int>(rng() % 10);
    auto g = testutil::random_graph(rng, n, 0.45);
    auto cl = canonicalize(g);
    CHECK(relabel(g, cl.perm) == cl.graph);
    CHECK(cl.graph.triangle_bits() == canonical_form(g).bits);
  }
}

TEST_CASE("canonical form handles highly symmetric graphs quickly") {
  std::mt19937 rng(5);
  CHECK(canonical_form(SimpleGraph(12)).n == 12);
  CHECK(canonical_form(complete_graph(12)).n == 12);
  auto s = star_join(12, 4);
  CHECK(canonical_form(s) == canonical_form(relabel(s, testutil::random_permutation(rng, 12))));
}
