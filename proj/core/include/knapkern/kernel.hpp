#pragma once

#include <cstddef>
#include <vector>

#include "knapkern/types.hpp"

namespace knapkern {

// Multiplicity view of a Knapsack instance: n_{i,j} items have weight
// weights[i] and profit profits[j]. Both value lists are distinct and
// ascending.
struct GroupedInstance {
  std::vector<Nat> weights;
  std::vector<Nat> profits;
  std::vector<std::vector<unsigned long>> multiplicity;  // [i][j]
  Nat capacity;
  Nat target;

  std::size_t variable_count() const noexcept { return weights.size() * profits.size(); }
  std::size_t item_count() const noexcept;
  // Row-major variable index p# * i + j.
  std::size_t variable(std::size_t i, std::size_t j) const noexcept { return profits.size() * i + j; }
};

GroupedInstance group(const KnapsackInstance& inst);

// Coefficient-reduced form of the grouped ILP. Vectors are indexed by the
// row-major variable index.
struct ReducedILP {
  std::vector<Int> weights;
  std::vector<Int> profits;
  Int capacity;
  Int target;
  std::vector<unsigned long> bounds;
};

ReducedILP reduce_ilp(const GroupedInstance& g);

// Multipliers 1, 2, 4, ..., 2^{s-1}, m - 2^s + 1 whose subset sums are
// exactly {0..m}.
std::vector<unsigned long> binary_split(unsigned long bound);

// One item (c*w, c*p) per split multiplier c of every variable. Throws
// Error(precondition) on negative coefficients.
KnapsackInstance ilp_to_knapsack(const ReducedILP& ilp);

inline constexpr unsigned long long kGroupedNodeBudget = 100'000'000;

struct GroupedSolution {
  bool feasible = false;
  std::vector<unsigned long> assignment;  // x_{i,j} by row-major index
  Nat weight;
  Nat profit;
};

// Exact depth-first branch and bound over the bounded variables, pruned by
// capacity and a fractional-relaxation profit bound. Throws Error(budget)
// once more than `node_budget` nodes are expanded.
GroupedSolution solve_grouped(const GroupedInstance& g,
                              unsigned long long node_budget = kGroupedNodeBudget);

// solve_grouped, translated back to item indices of `inst`.
SolverResult solve_grouped_items(const KnapsackInstance& inst);

enum class KernelBranch { solved, reduced };

struct KernelReport {
  std::size_t r = 0;  // w# * p#
  KernelBranch branch = KernelBranch::solved;
  std::size_t input_bits = 0;
  std::size_t output_bits = 0;
};

struct KernelResult {
  KnapsackInstance instance;
  KernelReport report;
};

// Solved branch when r * lg r <= lg n (lg = bit length): emits the
// one-item yes instance or the empty no instance. Otherwise groups,
// reduces coefficients with N = n + 1 and re-encodes by binary splitting.
KernelResult kernelize(const KnapsackInstance& inst);

// Sum of bit lengths of every weight, profit, the capacity and the target.
std::size_t encoding_bits(const KnapsackInstance& inst);

KnapsackInstance canonical_yes_instance();
KnapsackInstance canonical_no_instance();

}  // namespace knapkern
