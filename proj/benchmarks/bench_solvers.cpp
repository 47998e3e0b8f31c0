#include <benchmark/benchmark.h>

#include "knapkern/composition.hpp"
#include "knapkern/generators.hpp"
#include "knapkern/kernel.hpp"
#include "knapkern/solvers.hpp"
#include "knapkern/verify.hpp"

using namespace knapkern;

namespace {

KnapsackInstance composed(unsigned t, unsigned n, std::uint64_t pattern) {
  std::vector<RestrictedSubsetSumInstance> inputs;
  for (unsigned i = 0; i < t; ++i) inputs.push_back(compose_input(n, 1, i, (pattern >> i) & 1u));
  return compose(inputs).knapsack;
}

// 42 items: the largest instance the acceptance suite enumerates.
void BM_MeetInMiddleComposedT8(benchmark::State& state) {
  const auto inst = composed(8, 1, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_meet_in_middle(inst));
}
BENCHMARK(BM_MeetInMiddleComposedT8)->Arg(0)->Arg(1 << 5)->Unit(benchmark::kMillisecond);

void BM_MeetInMiddleComposedT4(benchmark::State& state) {
  const auto inst = composed(4, 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_meet_in_middle(inst));
}
BENCHMARK(BM_MeetInMiddleComposedT4)->Unit(benchmark::kMicrosecond);

void BM_BruteForce(benchmark::State& state) {
  const auto inst = gen_knapsack(static_cast<std::size_t>(state.range(0)), 3, 3, pow_ui(2, 64), 17);
  for (auto _ : state) benchmark::DoNotOptimize(solve_brute_force(inst));
}
BENCHMARK(BM_BruteForce)->Arg(12)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_DpByWeight(benchmark::State& state) {
  const auto inst = gen_knapsack(40, 3, 3, Nat(static_cast<unsigned long>(state.range(0))), 17);
  for (auto _ : state) benchmark::DoNotOptimize(solve_dp_by_weight(inst));
}
BENCHMARK(BM_DpByWeight)->Arg(1000)->Arg(100000)->Unit(benchmark::kMicrosecond);

void BM_Kernelize(benchmark::State& state) {
  const auto inst = gen_knapsack(12, static_cast<std::size_t>(state.range(0)),
                                 static_cast<std::size_t>(state.range(0)), pow_ui(2, 64), 23);
  for (auto _ : state) benchmark::DoNotOptimize(kernelize(inst));
}
BENCHMARK(BM_Kernelize)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
