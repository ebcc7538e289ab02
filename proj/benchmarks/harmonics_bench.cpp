#include <benchmark/benchmark.h>

#include "trivdiag/harmonics.hpp"

using namespace trivdiag::harmonics;

static void BM_KernelSpace(benchmark::State& state) {
  KernelOptions options;
  options.keep_basis = false;
  options.compute_traces = state.range(1) != 0;
  for (auto _ : state) {
    auto space = kernel_space(static_cast<int>(state.range(0)), options);
    benchmark::DoNotOptimize(space.total_dimension());
  }
}
BENCHMARK(BM_KernelSpace)->Args({3, 0})->Args({3, 1})->Unit(benchmark::kMillisecond);
