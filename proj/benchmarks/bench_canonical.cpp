#include <benchmark/benchmark.h>

#include <random>

#include "satspec/canonical.hpp"
#include "satspec/constructions.hpp"
#include "satspec/graph.hpp"
#include "satspec/graph6.hpp"

using namespace satspec;

namespace {

SimpleGraph random_graph(int n, double p, uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return SimpleGraph::from_edges(n, edges);
}

void BM_CanonicalFormRandom(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<SimpleGraph> graphs;
  for (uint32_t s = 0; s < 64; ++s) graphs.push_back(random_graph(n, 0.5, s));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(graphs[i++ & 63]));
  }
}
BENCHMARK(BM_CanonicalFormRandom)->Arg(6)->Arg(8)->Arg(9)->Arg(10)->Arg(12);

void BM_CanonicalFormSymmetric(benchmark::State& state) {
  auto star = star_join(12, 4);
  auto empty = SimpleGraph(12);
  auto w = wheel(12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(star));
    benchmark::DoNotOptimize(canonical_form(empty));
    benchmark::DoNotOptimize(canonical_form(w));
  }
}
BENCHMARK(BM_CanonicalFormSymmetric);

void BM_Graph6RoundTrip(benchmark::State& state) {
  auto g = random_graph(40, 0.3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_graph6(emit_graph6(g)));
  }
}
BENCHMARK(BM_Graph6RoundTrip);

}  // namespace
