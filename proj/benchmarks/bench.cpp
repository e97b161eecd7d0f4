#include <benchmark/benchmark.h>

#include <random>

#include "grcyc/cyclic_shift.hpp"
#include "grcyc/sampling.hpp"
#include "grcyc/superpotential.hpp"

using namespace grcyc;

static void BM_PluckerFromMatrix(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  std::mt19937_64 rng(1);
  const Matrix a = random_matrix(k, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(plucker_from_matrix(a));
}
BENCHMARK(BM_PluckerFromMatrix)->Args({2, 4})->Args({3, 8})->Args({6, 12});

static void BM_EnumerateFixedPoints(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_fixed_points(k, n, Complex(-1.0, 1.0)));
}
BENCHMARK(BM_EnumerateFixedPoints)->Args({2, 6})->Args({3, 8})->Args({4, 10});

static void BM_FindCriticalPoints(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(find_critical_points(k, n, 1.0, 10, 1));
}
BENCHMARK(BM_FindCriticalPoints)->Args({2, 4})->Args({2, 6})->Args({3, 6})->Unit(benchmark::kMillisecond);

static void BM_Flow(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  std::mt19937_64 rng(2);
  const auto p = random_tp_point(k, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(flow(p, 10.0));
}
BENCHMARK(BM_Flow)->Args({2, 5})->Args({3, 8})->Args({5, 12});
BENCHMARK_MAIN();
