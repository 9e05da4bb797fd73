#include <benchmark/benchmark.h>

#include "satspec/spectrum.hpp"

using namespace satspec;

namespace {

void BM_EnumerateClasses(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_nonisomorphic(n));
  }
}
BENCHMARK(BM_EnumerateClasses)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SpectrumScan(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_saturated(n, 2));
  }
}
BENCHMARK(BM_SpectrumScan)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
