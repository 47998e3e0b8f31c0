#pragma once

#include <cstddef>

#include "knapkern/types.hpp"

namespace knapkern {

inline constexpr std::size_t kBruteForceMaxItems = 25;
inline constexpr std::size_t kMeetInMiddleMaxItems = 48;
inline constexpr unsigned long long kDpMaxCapacity = 10'000'000;

// Enumerates all 2^n subsets. When feasible the witness is a maximum-profit
// subset within capacity; ties go to the lexicographically smallest index
// sequence.
SolverResult solve_brute_force(const KnapsackInstance& inst);

// Splits items into halves, enumerates both, and pairs each state of the
// first half with the best state of the second half that still fits.
// Same witness as solve_brute_force.
SolverResult solve_meet_in_middle(const KnapsackInstance& inst);

// Bellman's weight-indexed table. Capacity is clamped to the total item
// weight before the guard is applied. Same witness as solve_brute_force.
SolverResult solve_dp_by_weight(const KnapsackInstance& inst);

// Lexicographic comparison of index sets encoded as bitmasks (bit i = item i).
bool lex_less_mask(unsigned long long a, unsigned long long b);

}  // namespace knapkern
