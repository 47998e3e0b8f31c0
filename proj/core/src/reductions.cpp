#include "knapkern/reductions.hpp"

#include <numeric>

#include "knapkern/error.hpp"
#include "knapkern/restricted.hpp"

namespace knapkern {

namespace {

// Advances `combo` (strictly increasing indices into [0, universe)) to the
// next combination in lexicographic order; false when exhausted.
bool next_combination(std::vector<std::size_t>& combo, std::size_t universe) {
  const std::size_t k = combo.size();
  for (std::size_t i = k; i-- > 0;) {
    if (combo[i] < universe - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

RestrictedSubsetSumInstance x3c_to_rss(const X3CInstance& inst) {
  const unsigned long base = 3ul * inst.n() + 1;
  std::vector<Nat> numbers;
  numbers.reserve(inst.triples().size());
  for (const auto& triple : inst.triples()) {
    Nat a = 0;
    for (unsigned e : triple) a += pow_ui(base, e);
    numbers.push_back(std::move(a));
  }
  return RestrictedSubsetSumInstance(inst.n(), std::move(numbers));
}

KnapsackInstance subset_sum_to_knapsack(const SubsetSumInstance& inst) {
  KnapsackInstance out;
  out.items.reserve(inst.numbers.size());
  for (const auto& a : inst.numbers) out.items.push_back(Item{a, a, {}});
  out.capacity = inst.target;
  out.target = inst.target;
  return out;
}

SolverResult rss_decide(const RestrictedSubsetSumInstance& inst) {
  const std::size_t total = inst.numbers().size();
  const std::size_t n = inst.n();
  if (binomial(total, n) > static_cast<unsigned long>(kRssDecideGuard)) {
    fail(ErrorCode::guard, "rss_decide: C(3n, n) exceeds 10^6");
  }
  const Nat goal = restricted_target(inst.n());
  std::vector<std::size_t> combo(n);
  std::iota(combo.begin(), combo.end(), std::size_t{0});
  do {
    Nat sum = 0;
    for (std::size_t position : combo) sum += inst.numbers()[position];
    if (sum == goal) return SolverResult{true, combo, goal, goal};
  } while (next_combination(combo, total));
  return SolverResult{};
}

std::vector<std::size_t> brute_force_exact_cover(const X3CInstance& inst) {
  const std::size_t n = inst.n();
  const std::size_t count = inst.triples().size();
  std::vector<std::size_t> combo(n);
  std::iota(combo.begin(), combo.end(), std::size_t{0});
  std::vector<bool> covered(3 * n + 1);
  do {
    std::fill(covered.begin(), covered.end(), false);
    bool ok = true;
    for (std::size_t t : combo) {
      for (unsigned e : inst.triples()[t]) {
        if (covered[e]) ok = false;
        covered[e] = true;
      }
    }
    if (ok) return combo;
  } while (next_combination(combo, count));
  return {};
}

}  // namespace knapkern
