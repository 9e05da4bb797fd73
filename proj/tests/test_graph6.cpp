#include <doctest.h>

#include <random>

#include "satspec/graph6.hpp"
#include "test_util.hpp"

using namespace satspec;

// Hand-encoded vectors, derived directly from the format definition:
// size byte n+63, then the upper triangle column by column, 6 bits per byte
// MSB first, +63.
TEST_CASE("graph6 known encodings") {
  auto k3 = parse_graph6("Bw");
  CHECK(k3.n() == 3);
  CHECK(k3.edge_count() == 3);

  CHECK(emit_graph6(SimpleGraph(1)) == "@");
  CHECK(emit_graph6(SimpleGraph(0)) == "?");

  // P3 = 0-1-2: bits 101 padded to 101000 = 40 -> 'g'
  auto p3 = testutil::path_graph(3);
  CHECK(emit_graph6(p3) == "Bg");

  // K2 = single edge: bit 1 padded to 100000 = 32 -> '_'
  CHECK(emit_graph6(SimpleGraph::from_edges(2, {{0, 1}})) == "A_");
  CHECK(emit_graph6(SimpleGraph(2)) == "A?");

  // C5 with the natural labeling 0-1-2-3-4-0: bits 1010011001 -> "Dhc"
  CHECK(emit_graph6(testutil::cycle_graph(5)) == "Dhc");
  CHECK(parse_graph6("Dhc").edge_count() == 5);
}

TEST_CASE("graph6 malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);     // too short
  CHECK_THROWS_AS(parse_graph6("Bww"), Graph6Error);   // too long
  CHECK_THROWS_AS(parse_graph6("B!"), Graph6Error);    // bad data byte
  CHECK_THROWS_AS(parse_graph6("~??"), Graph6Error);   // multi-byte size field
  CHECK_THROWS_AS(parse_graph6("AW"), Graph6Error);    // nonzero padding

  try {
    parse_graph6("B!");
  } catch (const Graph6Error& e) {
    CHECK(e.byte_pos == 1);
  }
  try {
    parse_graph6("Bw ");
  } catch (const Graph6Error& e) {
    CHECK(e.byte_pos == 2);  // first extra byte
  }
}

TEST_CASE("graph6 round trip") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 300; ++iter) {
    int n = static_cast<int>(rng() % 13);
    auto g = testutil::random_graph(rng, n, 0.4);
    auto line = emit_graph6(g);
    CHECK(parse_graph6(line) == g);
    // a valid line re-emits byte for byte
    CHECK(emit_graph6(parse_graph6(line)) == line);
  }
  // a couple of larger orders, up to the 62-vertex cap
  for (int n : {30, 62}) {
    auto g = testutil::random_graph(rng, n, 0.1);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
}
