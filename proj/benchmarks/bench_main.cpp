#include <benchmark/benchmark.h>

#include <random>

#include "hyperherm/structure_analysis.hpp"

using namespace hyperherm;

namespace {

Poly dense_poly(std::mt19937_64& rng, int degree) {
  Poly p;
  for (int t = 0; t < 12; ++t) {
    Poly::Exponents e{};
    for (int k = 0; k < degree; ++k) ++e[rng() % Poly::kVariables];
    p += Poly::monomial(e, Rational(static_cast<long>(rng() % 17) - 8, static_cast<long>(rng() % 5) + 1));
  }
  return p;
}

void BM_PolyMultiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int degree = static_cast<int>(state.range(0));
  const Poly a = dense_poly(rng, degree), b = dense_poly(rng, degree);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(2)->Arg(4)->Arg(8);

void BM_SymbolicPipeline(benchmark::State& state) {
  const auto lam = symbolic_parameters();
  for (auto _ : state) benchmark::DoNotOptimize(analyze_family(lam));
}
BENCHMARK(BM_SymbolicPipeline)->Unit(benchmark::kMillisecond);

void BM_NumericPipeline(benchmark::State& state) {
  const Parameters<Rational> lam = {Rational(1, 2), Rational(-3), Rational(2, 7), Rational(5)};
  for (auto _ : state) benchmark::DoNotOptimize(analyze_family(lam));
}
BENCHMARK(BM_NumericPipeline)->Unit(benchmark::kMillisecond);

void BM_SquareNorm(benchmark::State& state) {
  const auto fa = analyze_family(symbolic_parameters());
  for (auto _ : state) benchmark::DoNotOptimize(square_norm(fa.structure.F[1], fa.hg.metric));
}
BENCHMARK(BM_SquareNorm);

void BM_Projectors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  const auto h = standard_structure<Rational>(n);
  const auto f = random_form(n, rng);
  for (auto _ : state)
    for (int a = 0; a < 4; ++a) benchmark::DoNotOptimize(project(f, h, a));
}
BENCHMARK(BM_Projectors)->Arg(1)->Arg(2)->Arg(4);

}  // namespace
BENCHMARK_MAIN();
