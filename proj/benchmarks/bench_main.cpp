#include "qtorus/harness.hpp"
#include "qtorus/knots.hpp"
#include "qtorus/qseries.hpp"
#include "qtorus/thetas.hpp"
#include "qtorus/voa.hpp"

#include <benchmark/benchmark.h>

using namespace qtorus;

static void BM_JonesTorusKnot(benchmark::State& state) {
  const long N = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(jones_torus_knot(3, 4, N));
}
BENCHMARK(BM_JonesTorusKnot)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

static void BM_FamilyThree(benchmark::State& state) {
  const long N = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(jones_family_three(2, 3, 1, 1, N));
}
BENCHMARK(BM_FamilyThree)->Arg(5)->Arg(10)->Arg(15);

static void BM_KashaevInvariant(benchmark::State& state) {
  TorusParams params;
  params.s = 2;
  params.t = 5;
  params.N = state.range(0);
  params.n = 1;
  params.m = 2;
  params.components = 2;
  for (auto _ : state) benchmark::DoNotOptimize(kashaev_invariant(params, Precision{128}));
}
BENCHMARK(BM_KashaevInvariant)->Arg(8)->Arg(16)->Arg(32);

static void BM_EtaSeries(benchmark::State& state) {
  const Rational order(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eta_series(order));
}
BENCHMARK(BM_EtaSeries)->Arg(100)->Arg(400)->Arg(1600);

static void BM_DivideByEta(benchmark::State& state) {
  const Rational order(state.range(0));
  const QSeries num = char_X_numerator(VoaLabel{3, 4, 1, 1}, order + Rational(1, 24));
  for (auto _ : state) benchmark::DoNotOptimize(divide_by_eta(num, order));
}
BENCHMARK(BM_DivideByEta)->Arg(25)->Arg(50)->Arg(100);

static void BM_EichlerLimit(benchmark::State& state) {
  const ThetaKind kind = PhiKind{3, 4, 1, 1};
  const long N = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(eichler_limit(kind, N, Precision{128}));
}
BENCHMARK(BM_EichlerLimit)->Arg(10)->Arg(40)->Arg(160);

static void BM_AsymptoticExpansion(benchmark::State& state) {
  const ThetaKind kind = PhiKind{2, 3, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(asymptotic_expansion(kind, 80, state.range(0), Precision{128}));
}
BENCHMARK(BM_AsymptoticExpansion)->Arg(0)->Arg(2)->Arg(4);

static void BM_GradedAtiyahBott(benchmark::State& state) {
  const Rational order(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ab_char_st_graded(VoaLabel{2, 5, 1, 2}, order));
}
BENCHMARK(BM_GradedAtiyahBott)->Arg(20)->Arg(50);

static void BM_VerifyTail(benchmark::State& state) {
  const long order = state.range(0);
  const long N = tail_needed_N(2, 3, 1, 1, order);
  for (auto _ : state) benchmark::DoNotOptimize(verify_tail(2, 3, 1, 1, N, order));
}
BENCHMARK(BM_VerifyTail)->Arg(10)->Arg(30)->Arg(60);

static void BM_GaussExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_gauss(3, 5, 2, 3, state.range(0), Mode::Exact));
}
BENCHMARK(BM_GaussExact)->Arg(4)->Arg(12)->Arg(24);

BENCHMARK_MAIN();
