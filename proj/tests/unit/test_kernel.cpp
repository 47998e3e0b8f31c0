#include "doctest.h"
#include "oracles.hpp"

#include "knapkern/composition.hpp"
#include "knapkern/error.hpp"
#include "knapkern/generators.hpp"
#include "knapkern/kernel.hpp"
#include "knapkern/rng.hpp"
#include "knapkern/solvers.hpp"

using namespace knapkern;

namespace {

KnapsackInstance make(std::vector<std::pair<long, long>> items, long W, long P) {
  KnapsackInstance inst;
  for (auto [w, p] : items) inst.items.push_back(Item{w, p, {}});
  inst.capacity = W;
  inst.target = P;
  return inst;
}

// Feasibility of sum w_v x_v <= W, sum p_v x_v >= P over 0 <= x_v <= bound_v.
template <class V>
bool bounded_ilp_feasible(const std::vector<V>& w, const std::vector<V>& p, const V& W, const V& P,
                          const std::vector<unsigned long>& bounds) {
  std::vector<unsigned long> x(bounds.size(), 0);
  while (true) {
    V sw = 0, sp = 0;
    for (std::size_t v = 0; v < x.size(); ++v) {
      sw += w[v] * x[v];
      sp += p[v] * x[v];
    }
    if (sw <= W && sp >= P) return true;
    std::size_t v = 0;
    while (v < x.size() && x[v] == bounds[v]) x[v++] = 0;
    if (v == x.size()) return false;
    ++x[v];
  }
}

bool ilp1_feasible(const GroupedInstance& g) {
  std::vector<Int> w(g.variable_count()), p(g.variable_count());
  std::vector<unsigned long> bounds(g.variable_count());
  for (std::size_t i = 0; i < g.weights.size(); ++i)
    for (std::size_t j = 0; j < g.profits.size(); ++j) {
      w[g.variable(i, j)] = g.weights[i];
      p[g.variable(i, j)] = g.profits[j];
      bounds[g.variable(i, j)] = g.multiplicity[i][j];
    }
  return bounded_ilp_feasible<Int>(w, p, g.capacity, g.target, bounds);
}

}  // namespace

TEST_CASE("group") {
  const auto g = group(make({{2, 3}, {2, 3}, {2, 7}}, 5, 6));
  CHECK(g.weights == std::vector<Nat>{2});
  CHECK(g.profits == std::vector<Nat>{3, 7});
  CHECK(g.multiplicity == std::vector<std::vector<unsigned long>>{{2, 1}});
  CHECK(g.item_count() == 3);
  CHECK(g.variable_count() == 2);

  const auto empty = group(make({}, 3, 0));
  CHECK(empty.variable_count() == 0);
  CHECK(solve_grouped(empty).feasible);
  CHECK_FALSE(solve_grouped(group(make({}, 3, 1))).feasible);

  const RestrictedSubsetSumInstance yes(1, {84, 84, 84});
  const std::vector<RestrictedSubsetSumInstance> four(4, yes);
  const auto composed = compose(four);
  CHECK(group(composed.knapsack).item_count() == 3 * 4 + 3 + 2 + 4);
}

TEST_CASE("binary splitting") {
  CHECK(binary_split(5) == std::vector<unsigned long>{1, 2, 2});
  CHECK(binary_split(1) == std::vector<unsigned long>{1});
  CHECK(binary_split(0).empty());
  CHECK(binary_split(7) == std::vector<unsigned long>{1, 2, 4});
  for (unsigned long m = 0; m <= 64; ++m) {
    const auto parts = binary_split(m);
    std::set<unsigned long> reach{0};
    for (auto c : parts) {
      std::set<unsigned long> next = reach;
      for (auto s : reach) next.insert(s + c);
      reach = next;
    }
    std::set<unsigned long> expected;
    for (unsigned long v = 0; v <= m; ++v) expected.insert(v);
    CHECK(reach == expected);
  }
}

TEST_CASE("reduce ilp examples") {
  const Nat big = pow_ui(10, 9);
  KnapsackInstance single;
  single.items.push_back(Item{big, big, {}});
  single.capacity = big;
  single.target = big;
  const auto ri = reduce_ilp(group(single));
  REQUIRE(ri.weights.size() == 1);
  CHECK(ri.weights[0] == ri.capacity);
  CHECK(ri.profits[0] == ri.target);
  CHECK(ri.weights[0] > 0);
  CHECK(bounded_ilp_feasible<Int>(ri.weights, ri.profits, ri.capacity, ri.target, ri.bounds));

  const auto no = reduce_ilp(group(make({{2, 3}}, 5, 6)));
  CHECK_FALSE(bounded_ilp_feasible<Int>(no.weights, no.profits, no.capacity, no.target, no.bounds));
}

TEST_CASE("reduced coefficients keep equalities and positivity") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = gen_knapsack(rng.uniform(3, 10), rng.uniform(1, 2), rng.uniform(1, 2), pow_ui(2, 64),
                                   rng.next());
    const auto g = group(inst);
    const auto ri = reduce_ilp(g);
    for (std::size_t i = 0; i < g.weights.size(); ++i) {
      for (std::size_t j = 0; j < g.profits.size(); ++j) {
        CHECK(ri.weights[g.variable(i, j)] > 0);
        CHECK(ri.profits[g.variable(i, j)] > 0);
        CHECK(ri.weights[g.variable(i, j)] == ri.weights[g.variable(i, 0)]);
        CHECK(ri.profits[g.variable(i, j)] == ri.profits[g.variable(0, j)]);
      }
    }
  }
}

TEST_CASE("ILP (1) and its reduction agree") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t wd = rng.uniform(1, 2), pd = rng.uniform(1, 2);
    const std::size_t n = rng.uniform(std::max(wd, pd), 10);
    const auto inst = gen_knapsack(n, wd, pd, trial % 2 ? Nat(1000) : pow_ui(2, 64), rng.next());
    const auto g = group(inst);
    const auto ri = reduce_ilp(g);
    CHECK(ilp1_feasible(g) == bounded_ilp_feasible<Int>(ri.weights, ri.profits, ri.capacity, ri.target, ri.bounds));
  }
}

TEST_CASE("ilp to knapsack") {
  ReducedILP ri;
  ri.weights = {3, 4};
  ri.profits = {5, 1};
  ri.bounds = {5, 0};
  ri.capacity = 9;
  ri.target = 15;
  const auto inst = ilp_to_knapsack(ri);
  REQUIRE(inst.items.size() == 3);
  CHECK(inst.items[1].weight == 6);
  CHECK(inst.items[2].profit == 10);
  CHECK(solve_brute_force(inst).feasible);
  ri.weights[0] = -1;
  CHECK_THROWS_AS(ilp_to_knapsack(ri), Error);
}

TEST_CASE("solve grouped") {
  const auto g = group(make({{2, 3}, {2, 3}, {2, 7}}, 5, 9));
  const auto s = solve_grouped(g);
  CHECK(s.feasible);
  CHECK(s.assignment == std::vector<unsigned long>{1, 1});
  CHECK(s.weight == 4);
  CHECK(s.profit == 10);

  Rng rng(59);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t wd = rng.uniform(1, 2), pd = rng.uniform(1, 2);
    const std::size_t n = rng.uniform(std::max(wd, pd), 14);
    const auto inst = gen_knapsack(n, wd, pd, trial % 2 ? Nat(50) : pow_ui(2, 64), rng.next());
    const auto ref = oracle::knapsack(inst);
    const auto items = solve_grouped_items(inst);
    CHECK(items.feasible == ref.feasible);
    if (items.feasible) CHECK(is_solution(inst, items.chosen));
  }
  KnapsackInstance many;
  // Even weights cannot reach an odd target, but the relaxation bound cannot see that.
  for (int i = 0; i < 60; ++i) many.items.push_back(Item{Nat(1000 + 14 * i), Nat(1000 + 14 * i), {}});
  many.capacity = 15001;
  many.target = 15001;
  CHECK_THROWS_AS(solve_grouped(group(many), 1000), Error);
}

TEST_CASE("kernelize examples") {
  const auto small = make({{2, 3}, {2, 3}, {2, 3}}, 4, 6);
  const auto k = kernelize(small);
  CHECK(k.report.r == 1);
  CHECK(k.report.branch == KernelBranch::solved);
  CHECK(solve_brute_force(k.instance).feasible);
  CHECK(k.instance.items.size() == 1);

  const auto no = kernelize(make({{2, 3}}, 1, 3));
  CHECK(no.report.branch == KernelBranch::solved);
  CHECK(no.instance.items.empty());
  CHECK(no.instance.capacity == 0);
  CHECK(no.instance.target == 1);
  CHECK(encoding_bits(canonical_yes_instance()) == 4);

  const RestrictedSubsetSumInstance yes(1, {84, 84, 84}), nope(1, {12, 48, 192});
  for (const auto& pair : {std::vector{yes, nope}, std::vector{nope, nope}}) {
    const auto composed = compose(pair);
    const auto kr = kernelize(composed.knapsack);
    CHECK(kr.report.branch == KernelBranch::reduced);
    CHECK(solve_meet_in_middle(kr.instance).feasible == solve_meet_in_middle(composed.knapsack).feasible);
  }
}

TEST_CASE("kernelize preserves answers") {
  Rng rng(73);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t wd = rng.uniform(1, 3), pd = rng.uniform(1, 3);
    const std::size_t n = rng.uniform(std::max(wd, pd), 12);
    const auto inst = gen_knapsack(n, wd, pd, pow_ui(2, 64), rng.next());
    const auto kr = kernelize(inst);
    CHECK(solve_brute_force(kr.instance).feasible == oracle::knapsack(inst).feasible);
    CHECK(kr.report.output_bits == encoding_bits(kr.instance));
    CHECK(kr.report.r == count_distinct_weights(inst) * count_distinct_profits(inst));
  }
}
