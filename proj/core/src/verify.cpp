#include "knapkern/verify.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "knapkern/error.hpp"
#include "knapkern/generators.hpp"
#include "knapkern/reductions.hpp"
#include "knapkern/rng.hpp"
#include "knapkern/solvers.hpp"

namespace knapkern {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::vector<std::size_t> family_members(const ComposedInstance& composed,
                                        std::span<const std::size_t> chosen, std::size_t which) {
  std::vector<std::size_t> out;
  for (auto idx : chosen) {
    if (composed.knapsack.items[idx].label.index() == which) out.push_back(idx);
  }
  return out;
}

}  // namespace

bool compose_oracle_admissible(unsigned t, unsigned n) {
  if (t < 2 || (t & (t - 1)) != 0) return false;
  return (n == 1 && t <= 8) || (n == 2 && t <= 4);
}

bool ComposeVerification::passed() const noexcept {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed(); });
}

std::vector<std::uint64_t> compose_patterns(unsigned t, std::size_t trials, std::uint64_t seed) {
  std::vector<std::uint64_t> out{0};
  for (unsigned i = 0; i < t; ++i) out.push_back(std::uint64_t{1} << i);
  std::set<std::uint64_t> seen(out.begin(), out.end());
  if (t < 64 && (std::uint64_t{1} << t) <= trials) {
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << t); ++p) {
      if (seen.insert(p).second) out.push_back(p);
    }
    return out;
  }
  Rng rng(seed);
  const std::uint64_t hi = t >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
  while (out.size() < trials) {
    const std::uint64_t p = rng.uniform(0, hi);
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

RestrictedSubsetSumInstance compose_input(unsigned n, std::uint64_t seed, std::size_t position,
                                          bool want_yes) {
  const std::uint64_t derived = splitmix(seed ^ splitmix(2 * position + (want_yes ? 1 : 0)));
  return gen_rss(n, derived, want_yes);
}

PatternOutcome verify_pattern(unsigned t, unsigned n, std::uint64_t seed, std::uint64_t pattern,
                              YRule y_rule) {
  PatternOutcome out;
  out.pattern = pattern;
  for (unsigned i = 0; i < t; ++i) {
    const bool yes = (pattern >> i) & 1u;
    out.expected = out.expected || yes;
    out.inputs.push_back(compose_input(n, seed, i, yes));
  }
  const ComposedInstance composed = compose(out.inputs, y_rule);

  const SolverResult result = solve_meet_in_middle(composed.knapsack);
  out.verdict = result.feasible;
  if (composed.knapsack.items.size() <= kBruteForceMaxItems) {
    out.cross_checked = solve_brute_force(composed.knapsack).feasible == result.feasible;
    out.verdict = out.verdict && out.cross_checked;
  }

  if (result.feasible) {
    const auto index_part = family_members(composed, result.chosen, 3);
    const auto quad_part = family_members(composed, result.chosen, 2);
    bool matched = false;
    for (unsigned i = 0; i < t && !matched; ++i) {
      if (!((pattern >> i) & 1u)) continue;
      if (index_selection(composed, i) == index_part) {
        matched = true;
        out.quadratization_part_ok = quadratization_selection(composed, i) == quad_part;
      }
    }
    out.index_part_ok = matched;
  }

  for (unsigned i = 0; i < t; ++i) {
    if (!((pattern >> i) & 1u)) continue;
    const SolverResult witness = rss_decide(out.inputs[i]);
    if (!witness.feasible) {
      out.canonical_ok = false;
      continue;
    }
    const auto chosen = canonical_solution(composed, i, witness.chosen);
    out.canonical_ok = out.canonical_ok &&
                       total_weight(composed.knapsack, chosen) == composed.constants.W &&
                       total_profit(composed.knapsack, chosen) == composed.constants.P;
  }
  return out;
}

ComposeVerification verify_compose(unsigned t, unsigned n, std::size_t trials, std::uint64_t seed,
                                   YRule y_rule) {
  if (!compose_oracle_admissible(t, n)) {
    fail(ErrorCode::guard, "verify compose: (t=" + std::to_string(t) + ", n=" + std::to_string(n) +
                               ") is outside the exact-oracle range");
  }
  ComposeVerification out{t, n, seed, y_rule, {}};
  for (auto pattern : compose_patterns(t, trials, seed)) {
    out.outcomes.push_back(verify_pattern(t, n, seed, pattern, y_rule));
  }
  return out;
}

}  // namespace knapkern
