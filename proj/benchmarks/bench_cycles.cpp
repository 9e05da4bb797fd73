#include <benchmark/benchmark.h>

#include "satspec/constructions.hpp"
#include "satspec/cycles.hpp"
#include "satspec/saturation.hpp"

using namespace satspec;

namespace {

void BM_MaxPackingComplete(benchmark::State& state) {
  auto g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_disjoint_cycles(g));
  }
}
BENCHMARK(BM_MaxPackingComplete)->Arg(9)->Arg(12);

void BM_NoTwoCyclesWheel(benchmark::State& state) {
  // exhaustively proving the absence of two disjoint cycles
  auto g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(has_k_disjoint_cycles(g, 2));
  }
}
BENCHMARK(BM_NoTwoCyclesWheel)->Arg(12)->Arg(20)->Arg(30);

void BM_SaturationStatusWheel(benchmark::State& state) {
  auto g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(saturation_status(g, 2));
  }
}
BENCHMARK(BM_SaturationStatusWheel)->Arg(9)->Arg(12);

void BM_SaturationStatusConstructed(benchmark::State& state) {
  // the widest acceptance-sweep shape: W_a^{+1} plus pendants at n = 30
  auto out = construct_saturated(30, 2, 40);
  auto g = *out.graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(saturation_status(g, 2));
  }
}
BENCHMARK(BM_SaturationStatusConstructed);

void BM_K4Subdivision(benchmark::State& state) {
  auto g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(contains_k4_subdivision(g));
  }
}
BENCHMARK(BM_K4Subdivision)->Arg(8)->Arg(12);

}  // namespace
