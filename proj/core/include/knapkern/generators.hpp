#pragma once

#include <cstdint>

#include "knapkern/types.hpp"

namespace knapkern {

inline constexpr unsigned kX3CNoMaxN = 3;
inline constexpr unsigned long kX3CResampleBudget = 100'000;

// want_yes: three seeded random partitions of {1..3n} into triples,
// concatenated; the first partition is a planted cover.
// !want_yes (n in 2..3): random arrangements of the three-fold element
// multiset into triples, resampled until the brute-force oracle finds no
// cover. n = 1 has no no-instance and is rejected.
X3CInstance gen_x3c(unsigned n, std::uint64_t seed, bool want_yes);

// x3c_to_rss(gen_x3c(...)), except the n = 1 no-instance is the fixture
// {12, 48, 192}.
RestrictedSubsetSumInstance gen_rss(unsigned n, std::uint64_t seed, bool want_yes);

RestrictedSubsetSumInstance rss_no_fixture();

// Random instance with exactly w_distinct weights and p_distinct profits
// drawn from [1, max_value]; capacity and target uniform in
// [0, total weight] and [0, total profit].
KnapsackInstance gen_knapsack(std::size_t n_items, std::size_t w_distinct, std::size_t p_distinct,
                              const Nat& max_value, std::uint64_t seed);

}  // namespace knapkern
