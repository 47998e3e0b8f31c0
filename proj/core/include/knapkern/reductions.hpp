#pragma once

#include <vector>

#include "knapkern/types.hpp"

namespace knapkern {

// One number a_T = sum_{j in T} (3n+1)^j per triple, in input order.
RestrictedSubsetSumInstance x3c_to_rss(const X3CInstance& inst);

// Weight = profit = number; capacity = target = B.
KnapsackInstance subset_sum_to_knapsack(const SubsetSumInstance& inst);

inline constexpr unsigned long long kRssDecideGuard = 1'000'000;

// Exactly-n sub-multiset summing to B_n, found by enumerating n-subsets of
// positions in lexicographic order. `chosen` holds 0-based positions and
// weight = profit = B_n when feasible.
SolverResult rss_decide(const RestrictedSubsetSumInstance& inst);

// Reference oracle: first choice of n triples (lexicographic) that
// partitions {1..3n}, or empty if none exists.
std::vector<std::size_t> brute_force_exact_cover(const X3CInstance& inst);

}  // namespace knapkern
