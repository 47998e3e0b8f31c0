#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace knapkern {

// Signed arbitrary-precision integer. `Nat` is the same type and marks
// values that are nonnegative by contract.
using Int = mpz_class;
using Nat = mpz_class;
using Rational = mpq_class;

__extension__ typedef unsigned __int128 u128;

Int pow_int(const Int& base, unsigned long exponent);
Int pow_ui(unsigned long base, unsigned long exponent);

// Number of bits in |value|; 0 for 0.
std::size_t bit_length(const Int& value);
std::size_t bit_length(unsigned long long value);

std::string to_decimal(const Int& value);

// Strict decimal natural: nonempty, digits only, no leading zeros except "0".
std::optional<Nat> parse_natural(std::string_view text);

inline int sign(const Int& value) { return sgn(value); }

bool fits_u128(const Nat& value);
u128 to_u128(const Nat& value);
Nat from_u128(u128 value);

// Binomial coefficient C(n, k) exactly.
Nat binomial(unsigned long n, unsigned long k);

}  // namespace knapkern
