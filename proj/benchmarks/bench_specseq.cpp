#include <benchmark/benchmark.h>

#include "flagloop/quotient.hpp"
#include "flagloop/specseq.hpp"
#include "flagloop/torsion.hpp"

using namespace flagloop;

namespace {

void BM_DifferentialMatrix(benchmark::State& state) {
  int x = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(differential_matrix(PageCoordinate{4, x, 2}));
}

void BM_SymbolicImage(benchmark::State& state) {
  int x = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(differential_matrix_symbolic_image(
        PageCoordinate{4, x, 2}, GroupFamily::SU));
}

void BM_E3Entry(benchmark::State& state) {
  int x = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(e3_entry(PageCoordinate{4, x, 1}));
}

void BM_IdealDegreeSpan(benchmark::State& state) {
  int d = state.range(0);
  auto gens = family_ideal(4, GroupFamily::SU);
  for (auto _ : state)
    benchmark::DoNotOptimize(ideal_degree_span(4, gens, d));
}

void BM_FlagRingReduce(benchmark::State& state) {
  int n = state.range(0);
  // Worst monomial: everything on the last variable.
  ExponentVector e(n, 0);
  e[n - 1] = n * (n - 1) / 2 + 1;
  IntPolynomial p = make_monomial(e, 1);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(p, n));
}

}  // namespace

BENCHMARK(BM_DifferentialMatrix)->Arg(4)->Arg(7)->Arg(10);
BENCHMARK(BM_SymbolicImage)->Arg(4)->Arg(6);
BENCHMARK(BM_E3Entry)->Arg(3)->Arg(5);
BENCHMARK(BM_IdealDegreeSpan)->Arg(6)->Arg(10);
BENCHMARK(BM_FlagRingReduce)->Arg(4)->Arg(5)->Arg(6);
