#include <benchmark/benchmark.h>

#include "knapkern/composition.hpp"
#include "knapkern/generators.hpp"

using namespace knapkern;

namespace {

void BM_Compose(benchmark::State& state) {
  const auto t = static_cast<unsigned>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  std::vector<RestrictedSubsetSumInstance> inputs;
  for (unsigned i = 0; i < t; ++i) inputs.push_back(gen_rss(n, i, i % 2 == 0));
  for (auto _ : state) benchmark::DoNotOptimize(compose(inputs));
}
BENCHMARK(BM_Compose)->Args({2, 1})->Args({16, 2})->Args({64, 3})->Args({256, 3})->Unit(benchmark::kMicrosecond);

void BM_GenX3cNo(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gen_x3c(n, seed++, false));
}
BENCHMARK(BM_GenX3cNo)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
