#include <benchmark/benchmark.h>

#include "diomon/oracle.hpp"
#include "diomon/solver.hpp"

using namespace diomon;

namespace {

void BM_MinimalSolutions(benchmark::State& state) {
    IntVec coeffs{-1, 1, -1, -4};
    for (auto _ : state) benchmark::DoNotOptimize(minimal_homogeneous_solutions(coeffs));
}
BENCHMARK(BM_MinimalSolutions);

void BM_MinimalSolutionsWide(benchmark::State& state) {
    IntVec coeffs{3, -2, 4, -5, -1};
    for (auto _ : state) benchmark::DoNotOptimize(minimal_homogeneous_solutions(coeffs));
}
BENCHMARK(BM_MinimalSolutionsWide);

void BM_Closure(benchmark::State& state) {
    GeneratorSet seed({23}), steps({5, 6, 9});
    for (auto _ : state) benchmark::DoNotOptimize(smallest_b_monoid(seed, steps));
}
BENCHMARK(BM_Closure);

void BM_SolveZeroCase(benchmark::State& state) {
    ProblemInstance inst{{4, 5}, {3, 6}, 0, 0};
    for (auto _ : state) benchmark::DoNotOptimize(solve(inst));
}
BENCHMARK(BM_SolveZeroCase);

void BM_SolveGeneral(benchmark::State& state) {
    ProblemInstance inst{{4, 5}, {3, 6}, 3, 1};
    for (auto _ : state) benchmark::DoNotOptimize(solve(inst));
}
BENCHMARK(BM_SolveGeneral);

void BM_BruteForceSet(benchmark::State& state) {
    ProblemInstance inst{{4, 5}, {3, 6}, 3, 1};
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_set(inst, state.range(0)));
}
BENCHMARK(BM_BruteForceSet)->Arg(100)->Arg(400);

void BM_Frobenius(benchmark::State& state) {
    GeneratorSet gens({101, 103, 107});
    for (auto _ : state) benchmark::DoNotOptimize(frobenius_and_gaps(gens));
}
BENCHMARK(BM_Frobenius);

}  // namespace

BENCHMARK_MAIN();
