#include <benchmark/benchmark.h>

#include <random>

#include "boolnl/bitfn.hpp"
#include "boolnl/nlpoly.hpp"
#include "boolnl/nonlinearity.hpp"
#include "boolnl/transforms.hpp"

using namespace boolnl;

namespace {

BooleanFunction sample(int n) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n));
  return random_function(n, rng);
}

void BM_NlPolynomialFast(benchmark::State& state) {
  const auto f = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nl_polynomial_fast(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NlPolynomialFast)->DenseRange(8, 20, 2);

void BM_EvaluateAll(benchmark::State& state) {
  const auto p = nl_polynomial_fast(sample(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_all(p));
}
BENCHMARK(BM_EvaluateAll)->DenseRange(8, 20, 2);

void BM_Walsh(benchmark::State& state) {
  const auto f = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(walsh(f));
}
BENCHMARK(BM_Walsh)->DenseRange(8, 20, 2);

void BM_Moebius(benchmark::State& state) {
  const auto f = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(to_anf(f));
}
BENCHMARK(BM_Moebius)->DenseRange(8, 20, 4);

void BM_NonlinearityNlp(benchmark::State& state) {
  const auto f = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nonlinearity_nlp(f).value);
}
BENCHMARK(BM_NonlinearityNlp)->DenseRange(8, 20, 2);

void BM_NonlinearityWalsh(benchmark::State& state) {
  const auto f = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nonlinearity_walsh(f).value);
}
BENCHMARK(BM_NonlinearityWalsh)->DenseRange(8, 20, 2);

void BM_NonlinearityBrute(benchmark::State& state) {
  const auto f = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nonlinearity_brute(f).value);
}
BENCHMARK(BM_NonlinearityBrute)->DenseRange(6, 12, 2);

}  // namespace

BENCHMARK_MAIN();
