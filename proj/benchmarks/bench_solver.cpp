#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "l1tv/dtransform.hpp"
#include "l1tv/solver.hpp"
#include "scaling.hpp"

namespace {

std::vector<double> ascending_grid(std::size_t k, l1tv::Metric metric) {
  std::vector<double> v(k);
  const double lo = metric == l1tv::Metric::Circular ? -l1tv::kPi : 0.0;
  for (std::size_t i = 0; i < k; ++i) v[i] = lo + l1tv::kTwoPi * (i + 1) / static_cast<double>(k);
  return v;
}

void BM_DistTrans(benchmark::State& state, l1tv::Metric metric) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto grid = ascending_grid(k, metric);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> cost(0.0, 10.0);
  std::vector<double> b(k);
  for (auto& x : b) x = cost(rng);
  l1tv::DistanceTransform transform(grid, 1.5, metric);
  std::vector<double> d(k);
  for (auto _ : state) {
    d = b;
    transform.apply(d);
    benchmark::DoNotOptimize(d.data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_NaiveDistTrans(benchmark::State& state, l1tv::Metric metric) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto grid = ascending_grid(k, metric);
  std::vector<double> b(k, 1.0);
  for (auto _ : state) {
    auto d = l1tv::naive_dist_trans(b, grid, 1.5, metric);
    benchmark::DoNotOptimize(d.data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_Solve(benchmark::State& state, l1tv::Metric metric) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto signal = l1tv::bench::quantized_instance(metric, n, 360, 11);
  for (auto _ : state) {
    auto report = l1tv::solve(signal, 1.0);
    benchmark::DoNotOptimize(report.energy);
  }
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_DistTrans, real, l1tv::Metric::Real)
    ->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);
BENCHMARK_CAPTURE(BM_DistTrans, circular, l1tv::Metric::Circular)
    ->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);
BENCHMARK_CAPTURE(BM_NaiveDistTrans, real, l1tv::Metric::Real)
    ->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);
BENCHMARK_CAPTURE(BM_Solve, circular_k360, l1tv::Metric::Circular)
    ->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);
BENCHMARK_CAPTURE(BM_Solve, real_k360, l1tv::Metric::Real)
    ->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

BENCHMARK_MAIN();
