#include <benchmark/benchmark.h>

#include "trivdiag/tamari.hpp"

using trivdiag::tamari::TamariPoset;

static void BM_PosetBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto poset = TamariPoset::build(n, r);
    benchmark::DoNotOptimize(poset.size());
  }
}
BENCHMARK(BM_PosetBuild)->Args({5, 1})->Args({6, 1})->Args({7, 1})->Args({5, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);

static void BM_IntervalPolys(benchmark::State& state) {
  const auto poset = TamariPoset::build(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto polys = poset.all_interval_polys();
    benchmark::DoNotOptimize(polys.data());
  }
}
BENCHMARK(BM_IntervalPolys)->Args({5, 1})->Args({6, 1})->Args({5, 2})->Unit(benchmark::kMillisecond);
