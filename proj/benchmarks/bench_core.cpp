#include <benchmark/benchmark.h>

#include "invschub/insertion.hpp"
#include "invschub/involution.hpp"
#include "invschub/permutation.hpp"
#include "invschub/pfaffian.hpp"
#include "invschub/schubert.hpp"
#include "invschub/transition.hpp"

using namespace invschub;

static void BM_CountReducedWords(benchmark::State& state) {
  auto w = Permutation::longest(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_reduced_words(w));
}
BENCHMARK(BM_CountReducedWords)->DenseRange(4, 7);

static void BM_CountInvolutionWords(benchmark::State& state) {
  auto y = Involution::longest(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_involution_words(y));
}
BENCHMARK(BM_CountInvolutionWords)->DenseRange(4, 8);

static void BM_InvSchubert(benchmark::State& state) {
  auto y = Involution::longest(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inv_schubert_poly(y));
}
BENCHMARK(BM_InvSchubert)->DenseRange(3, 5);

static void BM_ExpandFhat(benchmark::State& state) {
  auto y = Involution::longest(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expand_Fhat(y));
}
BENCHMARK(BM_ExpandFhat)->DenseRange(4, 7);

static void BM_BetaCoefficients(benchmark::State& state) {
  auto y = Involution::longest(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(beta_coefficients(y, 16));
}
BENCHMARK(BM_BetaCoefficients)->DenseRange(3, 5);

static void BM_ShiftedHeckeInsert(benchmark::State& state) {
  const Word a{5, 4, 1, 3, 4, 5, 2, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(shifted_hecke_insert(a));
}
BENCHMARK(BM_ShiftedHeckeInsert);

static void BM_SchubertPfaffian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> phi;
  for (int i = 1; i <= n; ++i) phi.push_back(i);
  auto m = pfaffian_schubert_matrix(phi, n);
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(m));
}
BENCHMARK(BM_SchubertPfaffian)->DenseRange(2, 4);
BENCHMARK_MAIN();
