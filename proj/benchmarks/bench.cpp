#include <benchmark/benchmark.h>

#include "hyperdef/infinity.hpp"
#include "hyperdef/tangent.hpp"
#include "hyperdef/vinberg.hpp"

using namespace hyperdef;

static void BM_FieldMultiply(benchmark::State& state) {
  FieldElem a = parse_exact("(11+4*sqrt5)/41 + 3*sqrt2"), b = parse_exact("7/3 - sqrt10/5");
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_FieldMultiply);

static void BM_FieldInverse(benchmark::State& state) {
  FieldElem a = parse_exact("(11+4*sqrt5)/41 + 3*sqrt2 - sqrt10");
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_FieldInverse);

// 665857 - 470832 sqrt2 is about 7.5e-7, so the first interval round decides it
static void BM_SignNearZero(benchmark::State& state) {
  FieldElem a(Rational(665857), Rational(-470832), 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sign_of(a));
}
BENCHMARK(BM_SignNearZero);

static void BM_RelationMatrixExact(benchmark::State& state) {
  Arrangement f = builtin(Builtin::Family22, Parameter::exact(t_for_n(5)));
  for (auto _ : state) benchmark::DoNotOptimize(relation_matrix(f));
}
BENCHMARK(BM_RelationMatrixExact)->Unit(benchmark::kMillisecond);

static void BM_FiniteVolumeExtended(benchmark::State& state) {
  Arrangement e = builtin(Builtin::ExtendedGenerators, Parameter::exact(t_for_n(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(finite_volume_check(e));
}
BENCHMARK(BM_FiniteVolumeExtended)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_FiniteVolumeP24(benchmark::State& state) {
  Arrangement p = builtin(Builtin::P24, Parameter::none());
  for (auto _ : state) benchmark::DoNotOptimize(finite_volume_check(p));
}
BENCHMARK(BM_FiniteVolumeP24)->Unit(benchmark::kMillisecond);

static void BM_TangentKernel(benchmark::State& state) {
  FieldElem r = state.range(0) == 0 ? FieldElem(Rational(16, 25)) : FieldElem(Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(tangent_report(r, TangentMode::Gamma22Slice));
}
BENCHMARK(BM_TangentKernel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_SphereTable(benchmark::State& state) {
  Arrangement f = builtin(Builtin::Family22, Parameter::from_float(0.8));
  for (auto _ : state) benchmark::DoNotOptimize(sphere_table(f));
}
BENCHMARK(BM_SphereTable)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
