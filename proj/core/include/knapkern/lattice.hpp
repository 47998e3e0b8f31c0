#pragma once

#include <span>
#include <vector>

#include "knapkern/bigint.hpp"

namespace knapkern {

// Row-major basis: each inner vector is one lattice vector.
using IntMatrix = std::vector<std::vector<Int>>;

// Exact integral LLL (Lovasz parameter delta, 1/4 < delta < 1) in place.
// All Gram-Schmidt data is kept as integers d_i and lambda_{i,j} = d_j mu_{i,j},
// so no rounding error is possible. Throws Error(precondition) if the rows
// are linearly dependent.
void lll_reduce(IntMatrix& basis, const Rational& delta = Rational(3, 4));

struct DiophantineApproximation {
  Int q;                 // common denominator, q >= 1
  std::vector<Int> p;    // numerators, |q * alpha_i - p_i| <= 1/M
};

// Finds 1 <= q <= 2^{ceil(r(r+1)/4)} M^r and integers p with
// |q alpha_i - p_i| <= 1/M for every i, via LLL on the standard
// (r+1)-dimensional simultaneous approximation lattice.
DiophantineApproximation simultaneous_approximation(std::span<const Rational> alpha, const Nat& M);

}  // namespace knapkern
