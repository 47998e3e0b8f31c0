#pragma once

#include <array>
#include <optional>
#include <vector>

#include "knapkern/bigint.hpp"

namespace knapkern {

// B_n = sum_{j=1}^{3n} (3n+1)^j. Throws on n = 0.
Nat restricted_target(unsigned n);

// Exponents j1 <= j2 <= j3 in {1..3n} with a = sum (3n+1)^{j}.
using UniverseWitness = std::array<unsigned, 3>;

// Decides a in the restricted universe by base-(3n+1) digit expansion:
// digit 0 is zero, every digit is at most 3, digits sum to 3 and nothing
// sits above position 3n.
std::optional<UniverseWitness> membership_in_restricted_universe(const Nat& a, unsigned n);

inline constexpr unsigned kUniverseEnumerationGuard = 10000;

// Distinct members of the restricted universe, ascending. Length is
// (3n)(3n+1)(3n+2)/6.
std::vector<Nat> enumerate_restricted_universe(unsigned n);

// Little-endian base-b digits of a nonnegative value.
std::vector<unsigned long> digits_in_base(const Nat& value, unsigned long base);

inline constexpr unsigned long long kDigitSolutionsGuard = 10'000'000;

// Every vector x in {0..b}^k with sum x_i b^i = value, in lexicographic
// order. Exhaustive; guarded by (b+1)^k <= 10^7.
std::vector<std::vector<unsigned>> digit_solutions(const Nat& value, unsigned base, unsigned k);

}  // namespace knapkern
