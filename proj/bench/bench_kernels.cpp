#include <benchmark/benchmark.h>

#include "tauberlab/kernels.hpp"
#include "tauberlab/series.hpp"

using namespace tauberlab;

namespace {

const kernels::SeriesPrefix& prefix(std::int64_t n) {
  static std::int64_t cached_n = -1;
  static kernels::SeriesPrefix p;
  if (cached_n != n) {
    p = kernels::materialize(CoefficientSequence::builtin("harmonic"), static_cast<double>(n), n + 1);
    cached_n = n;
  }
  return p;
}

void BM_riesz_serial(benchmark::State& state) {
  const auto& p = prefix(state.range(0));
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::riesz_sum(p, x, 2));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_riesz_parallel(benchmark::State& state) {
  const auto& p = prefix(state.range(0));
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::riesz_sum(p, x, 2));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_damped_serial(benchmark::State& state) {
  const auto& p = prefix(state.range(0));
  const double X = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::damped_riesz_sum(p, 16.0 / X, X, 3));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_damped_parallel(benchmark::State& state) {
  const auto& p = prefix(state.range(0));
  const double X = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::damped_riesz_sum(p, 16.0 / X, X, 3));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_riesz_serial)->RangeMultiplier(10)->Range(10'000, 10'000'000)->UseRealTime();
BENCHMARK(BM_riesz_parallel)->RangeMultiplier(10)->Range(10'000, 10'000'000)->UseRealTime();
BENCHMARK(BM_damped_serial)->RangeMultiplier(10)->Range(10'000, 10'000'000)->UseRealTime();
BENCHMARK(BM_damped_parallel)->RangeMultiplier(10)->Range(10'000, 10'000'000)->UseRealTime();

BENCHMARK_MAIN();
