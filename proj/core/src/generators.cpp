#include "knapkern/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "knapkern/error.hpp"
#include "knapkern/reductions.hpp"
#include "knapkern/rng.hpp"

namespace knapkern {

namespace {

std::vector<Triple> chunk(const std::vector<unsigned>& elements) {
  std::vector<Triple> out;
  for (std::size_t k = 0; k + 2 < elements.size(); k += 3) {
    out.push_back(Triple{elements[k], elements[k + 1], elements[k + 2]});
  }
  return out;
}

bool has_repeat(const Triple& t) { return t[0] == t[1] || t[1] == t[2] || t[0] == t[2]; }

std::vector<Nat> sample_distinct(Rng& rng, std::size_t count, const Nat& max_value) {
  std::vector<Nat> out;
  while (out.size() < count) {
    Nat v = rng.uniform(Nat(1), max_value);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

X3CInstance gen_x3c(unsigned n, std::uint64_t seed, bool want_yes) {
  if (n == 0) fail(ErrorCode::precondition, "gen_x3c: n must be positive");
  Rng rng(seed);
  std::vector<unsigned> universe(3 * n);
  std::iota(universe.begin(), universe.end(), 1u);

  if (want_yes) {
    std::vector<Triple> triples;
    for (int copy = 0; copy < 3; ++copy) {
      auto order = universe;
      rng.shuffle(order);
      const auto part = chunk(order);
      triples.insert(triples.end(), part.begin(), part.end());
    }
    return X3CInstance(n, std::move(triples));
  }

  if (n == 1) {
    fail(ErrorCode::precondition, "gen_x3c: no n=1 no-instance exists (any triple covers)");
  }
  if (n > kX3CNoMaxN) {
    fail(ErrorCode::precondition, "gen_x3c: verified no-instances need n <= 3");
  }
  std::vector<unsigned> pool;
  for (unsigned e : universe) pool.insert(pool.end(), 3, e);
  for (unsigned long attempt = 0; attempt < kX3CResampleBudget; ++attempt) {
    rng.shuffle(pool);
    auto triples = chunk(pool);
    if (std::any_of(triples.begin(), triples.end(), has_repeat)) continue;
    X3CInstance inst(n, std::move(triples));
    if (brute_force_exact_cover(inst).empty()) return inst;
  }
  fail(ErrorCode::budget, "gen_x3c: no no-instance after " + std::to_string(kX3CResampleBudget) +
                              " resamples");
}

RestrictedSubsetSumInstance rss_no_fixture() {
  return RestrictedSubsetSumInstance(1, {Nat(12), Nat(48), Nat(192)});
}

RestrictedSubsetSumInstance gen_rss(unsigned n, std::uint64_t seed, bool want_yes) {
  if (n == 1 && !want_yes) return rss_no_fixture();
  return x3c_to_rss(gen_x3c(n, seed, want_yes));
}

KnapsackInstance gen_knapsack(std::size_t n_items, std::size_t w_distinct, std::size_t p_distinct,
                              const Nat& max_value, std::uint64_t seed) {
  const bool empty_ok = n_items == 0 && w_distinct == 0 && p_distinct == 0;
  if (!empty_ok && (w_distinct == 0 || p_distinct == 0 || w_distinct > n_items ||
                    p_distinct > n_items || max_value < Nat(static_cast<unsigned long>(w_distinct)) ||
                    max_value < Nat(static_cast<unsigned long>(p_distinct)))) {
    fail(ErrorCode::precondition, "gen_knapsack: unsatisfiable parameters");
  }
  Rng rng(seed);
  KnapsackInstance out;
  if (empty_ok) {
    out.capacity = 0;
    out.target = 0;
    return out;
  }
  const auto weights = sample_distinct(rng, w_distinct, max_value);
  const auto profits = sample_distinct(rng, p_distinct, max_value);
  Nat total_w = 0, total_p = 0;
  for (std::size_t k = 0; k < n_items; ++k) {
    // The first items pin every sampled value at least once.
    const auto wi = k < w_distinct ? k : static_cast<std::size_t>(rng.uniform(0, w_distinct - 1));
    const auto pi = k < p_distinct ? k : static_cast<std::size_t>(rng.uniform(0, p_distinct - 1));
    out.items.push_back(Item{weights[wi], profits[pi], {}});
    total_w += weights[wi];
    total_p += profits[pi];
  }
  rng.shuffle(out.items);
  out.capacity = rng.uniform(Nat(0), total_w);
  out.target = rng.uniform(Nat(0), total_p);
  return out;
}

}  // namespace knapkern
