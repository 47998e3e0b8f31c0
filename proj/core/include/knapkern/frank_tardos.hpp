#pragma once

#include <span>
#include <vector>

#include "knapkern/bigint.hpp"

namespace knapkern {

// Integer vector wbar with sign(w.b) = sign(wbar.b) for every integer b
// with ||b||_1 <= N. Repeatedly normalizes the residual by its largest
// entry, approximates it simultaneously with error below 1/N, and combines
// the approximations in a radix large enough that the first nonzero piece
// decides every sign. Deterministic. Throws on empty input or N < 1.
std::vector<Int> frank_tardos_reduce(std::span<const Rational> w, const Nat& N);
std::vector<Int> frank_tardos_reduce(std::span<const Int> w, const Nat& N);

// 2^{4 r^3} N^{r^2 + 2r}
Nat frank_tardos_norm_bound(std::size_t r, const Nat& N);

}  // namespace knapkern
