#include <benchmark/benchmark.h>

#include "riemann/arithmetic.hpp"
#include "riemann/branch.hpp"
#include "riemann/explicit_formula.hpp"
#include "riemann/special_functions.hpp"
#include "riemann/zero_finder.hpp"
#include "riemann/zeta.hpp"

using namespace riemann;

namespace {

const ZeroList& zeros_to(double height) {
  static const ZeroList zl = zeros::find_zeros_up_to(height);
  return zl;
}

void BM_Zeta(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta::zeta({0.5, t}));
}
BENCHMARK(BM_Zeta)->Arg(10)->Arg(100)->Arg(240);

void BM_ZetaReflected(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zeta::zeta({-3.5, 40.0}));
}
BENCHMARK(BM_ZetaReflected);

void BM_LiReal(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(special::li_real(1000.0));
}
BENCHMARK(BM_LiReal);

void BM_LiComplexPower(benchmark::State& state) {
  const ComplexPoint rho(0.5, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(special::li_complex_power(100.0, rho));
}
BENCHMARK(BM_LiComplexPower)->Arg(14)->Arg(236);

void BM_FormulaRiemann(benchmark::State& state) {
  formula::EvalRequest req;
  req.x = 100.5;
  req.zeros = zeros_to(100.0);
  for (auto _ : state) benchmark::DoNotOptimize(formula::f_riemann(req));
}
BENCHMARK(BM_FormulaRiemann)->Unit(benchmark::kMillisecond);

void BM_FormulaResidue(benchmark::State& state) {
  formula::EvalRequest req;
  req.x = 100.5;
  req.zeros = zeros_to(100.0);
  req.form = formula::Form::residue;
  for (auto _ : state) benchmark::DoNotOptimize(formula::f_residue(req));
}
BENCHMARK(BM_FormulaResidue)->Unit(benchmark::kMillisecond);

void BM_FindZeros(benchmark::State& state) {
  const double height = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeros::find_zeros_up_to(height));
}
BENCHMARK(BM_FindZeros)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_ArgumentPrinciple(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(branch::argument_principle_count(100.0));
}
BENCHMARK(BM_ArgumentPrinciple)->Unit(benchmark::kMillisecond);

void BM_Sieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(arith::sieve(state.range(0)));
}
BENCHMARK(BM_Sieve)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_SmallFStep(benchmark::State& state) {
  const auto pt = arith::sieve(100'000);
  for (auto _ : state) benchmark::DoNotOptimize(arith::small_f_step(65'536.0, pt));
}
BENCHMARK(BM_SmallFStep);

}  // namespace

BENCHMARK_MAIN();
