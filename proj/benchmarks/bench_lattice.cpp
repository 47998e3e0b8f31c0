#include <benchmark/benchmark.h>

#include "knapkern/frank_tardos.hpp"
#include "knapkern/lattice.hpp"
#include "knapkern/rng.hpp"

using namespace knapkern;

namespace {

std::vector<Int> random_vector(std::size_t r, std::uint64_t seed, const Nat& top) {
  Rng rng(seed);
  std::vector<Int> w;
  for (std::size_t i = 0; i < r; ++i) w.emplace_back(rng.uniform(Nat(1), top));
  return w;
}

void BM_FrankTardos(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const auto w = random_vector(r, 3, pow_ui(2, 64));
  const Nat N(static_cast<unsigned long>(r + 1));
  for (auto _ : state) benchmark::DoNotOptimize(frank_tardos_reduce(std::span<const Int>(w), N));
}
BENCHMARK(BM_FrankTardos)->Arg(2)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Lll(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  Rng rng(9);
  IntMatrix basis(dim, std::vector<Int>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) basis[i][j] = Int(rng.uniform(Nat(0), pow_ui(2, 40)));
    basis[i][i] += Int(pow_ui(2, 48));
  }
  for (auto _ : state) {
    IntMatrix copy = basis;
    lll_reduce(copy);
    benchmark::DoNotOptimize(copy);
  }
}
BENCHMARK(BM_Lll)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
