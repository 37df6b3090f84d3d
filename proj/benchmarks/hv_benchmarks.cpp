#include <benchmark/benchmark.h>

#include <random>

#include "hv/algebra.hpp"
#include "hv/automorphisms.hpp"
#include "hv/oracle.hpp"
#include "hv/parse.hpp"
#include "hv/scalar.hpp"

namespace {

using namespace hv;

Scalar sample(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-9, 9);
  const Scalar e2 = Scalar::indeterminate(2);
  const Scalar e3 = Scalar::indeterminate(3);
  return (Scalar(static_cast<long>(c(rng))) * e2 * e3 + Scalar(static_cast<long>(c(rng))) * e2 + Scalar(1L)) /
         (e3 + Scalar(static_cast<long>(c(rng) | 1)));
}

void BM_ScalarMultiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Scalar x = sample(rng);
  const Scalar y = sample(rng);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_ScalarMultiply);

void BM_ScalarAdd(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Scalar x = sample(rng);
  const Scalar y = sample(rng);
  for (auto _ : state) benchmark::DoNotOptimize(x + y);
}
BENCHMARK(BM_ScalarAdd);

void BM_ParseElement(benchmark::State& state) {
  const AlgebraContext ctx(3, 0, Variant::Extended);
  for (auto _ : state)
    benchmark::DoNotOptimize(parse_element(ctx, "((e2+1)/(e3-2))*L[1,0,-1] - 3*I[2,1,0] + (1/12)*CL"));
}
BENCHMARK(BM_ParseElement);

void BM_BracketExtended(benchmark::State& state) {
  const AlgebraContext ctx(2, 0, Variant::Extended);
  const Element x = parse_element(ctx, "L[1,1] + e2*I[2,-1] - L[-1,0]");
  const Element y = parse_element(ctx, "I[-1,-1] + (1/3)*L[1,0] + e2^2*L[-2,1]");
  for (auto _ : state) benchmark::DoNotOptimize(bracket(ctx, x, y));
}
BENCHMARK(BM_BracketExtended);

void BM_Jacobi(benchmark::State& state) {
  const AlgebraContext ctx(1, 0, Variant::Extended);
  const int radius = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_check(ctx, radius));
}
BENCHMARK(BM_Jacobi)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_AutComposeApply(benchmark::State& state) {
  const AlgebraContext ctx(1, 0);
  AutParams p = AutParams::identity(1);
  p.xi = ScaleUnit::negation(1);
  p.chi = Character({Scalar(Rational(2, 3))});
  p.l = Scalar(5L);
  p.l0 = Scalar(Rational(1, 2));
  p.l1 = Scalar(7L);
  const auto keys = window_keys(ctx, 3);
  for (auto _ : state) {
    const AutParams q = aut_compose(p, aut_inverse(p));
    for (const auto& k : keys) benchmark::DoNotOptimize(aut_apply(ctx, q, k));
  }
}
BENCHMARK(BM_AutComposeApply);

void BM_H2DimensionRankOne(benchmark::State& state) {
  const AlgebraContext ctx(1, 0);
  const int radius = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h2_dimension(ctx, radius, {11}));
}
BENCHMARK(BM_H2DimensionRankOne)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_H2DimensionRankTwo(benchmark::State& state) {
  const AlgebraContext ctx(2, -2);
  for (auto _ : state) benchmark::DoNotOptimize(h2_dimension(ctx, 3, {11, 23, 47}));
}
BENCHMARK(BM_H2DimensionRankTwo)->Unit(benchmark::kMillisecond)->Iterations(1)->UseRealTime();

void BM_DerDimension(benchmark::State& state) {
  const AlgebraContext ctx(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(der_dimension(ctx, GroupElem{0, 0}, 3, {11, 23, 47}));
}
BENCHMARK(BM_DerDimension)->Unit(benchmark::kMillisecond)->Iterations(1)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
