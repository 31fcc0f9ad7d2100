#include <random>

#include <benchmark/benchmark.h>

#include "flagloop/snf.hpp"
#include "flagloop/specseq.hpp"

using namespace flagloop;

namespace {

IntMatrix random_matrix(unsigned seed, std::size_t r, std::size_t c, int lo,
                        int hi) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

void BM_SnfNaiveDense(benchmark::State& state) {
  std::size_t n = state.range(0);
  IntMatrix m = random_matrix(42, n, n, -9, 9);
  for (auto _ : state) benchmark::DoNotOptimize(snf_naive(m));
}

void BM_SnfPivotDense(benchmark::State& state) {
  std::size_t n = state.range(0);
  IntMatrix m = random_matrix(42, n, n, -9, 9);
  for (auto _ : state) benchmark::DoNotOptimize(snf_pivot(m));
}

void BM_SmithDense(benchmark::State& state) {
  std::size_t n = state.range(0);
  IntMatrix m = random_matrix(42, n, n, -9, 9);
  for (auto _ : state) benchmark::DoNotOptimize(smith(m));
}

void BM_SmithDifferential(benchmark::State& state) {
  // Production shape: the n=4 boundary matrices that dominate the table run.
  int x = state.range(0);
  IntMatrix m = differential_matrix(PageCoordinate{4, x, 2});
  for (auto _ : state) benchmark::DoNotOptimize(smith(m));
}

void BM_ModPRankDifferential(benchmark::State& state) {
  int x = state.range(0);
  IntMatrix m = differential_matrix(PageCoordinate{4, x, 2});
  for (auto _ : state) benchmark::DoNotOptimize(snf_mod_p(m, 5));
}

}  // namespace

BENCHMARK(BM_SnfNaiveDense)->Arg(8)->Arg(16)->Arg(24);
BENCHMARK(BM_SnfPivotDense)->Arg(8)->Arg(16)->Arg(24);
BENCHMARK(BM_SmithDense)->Arg(8)->Arg(16)->Arg(24)->Arg(48);
BENCHMARK(BM_SmithDifferential)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_ModPRankDifferential)->Arg(6)->Arg(8)->Arg(10);
