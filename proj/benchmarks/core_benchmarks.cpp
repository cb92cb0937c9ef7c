#include <benchmark/benchmark.h>

#include "tlforge/combinators.hpp"
#include "tlforge/jones_wenzl.hpp"

using namespace tlforge;

static void BM_Kron(benchmark::State& state) {
  const Index n = state.range(0);
  const Matrix a = Matrix::Random(n, n);
  const Matrix b = Matrix::Random(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Kron)->RangeMultiplier(2)->Range(4, 32)->Complexity();

static void BM_VerifyT2(benchmark::State& state) {
  const Index n = state.range(0);
  const Matrix T = solution_matrix(n_r_plus_1(n, Complex(1.0), Complex(1.0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_triple_relations(T, n));
}
BENCHMARK(BM_VerifyT2)->DenseRange(2, 6, 2);

static void BM_JwLadder(benchmark::State& state) {
  const Index depth = state.range(0);
  const auto sol = to_solution(rank_one(2, Complex(1.0)));
  for (auto _ : state) benchmark::DoNotOptimize(jw_ladder(sol, depth));
}
BENCHMARK(BM_JwLadder)->DenseRange(2, 6);

static void BM_YangBaxter(benchmark::State& state) {
  const auto sol = to_solution(q_sqrt3());
  for (auto _ : state) benchmark::DoNotOptimize(verify_yang_baxter(sol, 0.3, 0.7));
}
BENCHMARK(BM_YangBaxter);

static void BM_Theorem9(benchmark::State& state) {
  const Index n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(construct_small_rank(4, n, q_threshold(4, n)));
}
BENCHMARK(BM_Theorem9)->DenseRange(5, 9);

static void BM_UnitarityCriterion(benchmark::State& state) {
  const auto inst = q2_block(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unitarity_criterion(inst.vs, 2.0));
}
BENCHMARK(BM_UnitarityCriterion)->DenseRange(2, 8, 2);

BENCHMARK_MAIN();
