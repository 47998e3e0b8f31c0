#include "knapkern/frank_tardos.hpp"

#include <algorithm>

#include "knapkern/error.hpp"
#include "knapkern/lattice.hpp"

namespace knapkern {

namespace {

Rational rational_abs(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }

}  // namespace

std::vector<Int> frank_tardos_reduce(std::span<const Rational> w, const Nat& N) {
  if (w.empty()) fail(ErrorCode::precondition, "frank_tardos_reduce: dimension 0");
  if (N < 1) fail(ErrorCode::precondition, "frank_tardos_reduce: N must be positive");
  const std::size_t r = w.size();
  const Nat M = N + 1;  // approximation error <= 1/(N+1) < 1/N

  std::vector<Rational> residual(w.begin(), w.end());
  std::vector<std::vector<Int>> pieces;
  for (;;) {
    Rational largest = 0;
    for (const auto& x : residual) largest = std::max(largest, rational_abs(x));
    if (largest == 0) break;

    std::vector<Rational> normalized(r);
    for (std::size_t i = 0; i < r; ++i) normalized[i] = residual[i] / largest;

    // Only distinct fractional magnitudes need approximating: entries of
    // magnitude 1 are exact for any q, zeros stay zero, and equal
    // magnitudes get equal numerators.
    std::vector<Rational> fractional;
    for (const auto& x : normalized) {
      const Rational mag = rational_abs(x);
      if (mag != 0 && mag != 1 &&
          std::find(fractional.begin(), fractional.end(), mag) == fractional.end()) {
        fractional.push_back(mag);
      }
    }
    std::sort(fractional.begin(), fractional.end());
    const auto approx = simultaneous_approximation(fractional, M);

    std::vector<Int> piece(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      const Rational mag = rational_abs(normalized[i]);
      if (mag == 0) continue;
      Int numer;
      if (mag == 1) {
        numer = approx.q;
      } else {
        const auto it = std::lower_bound(fractional.begin(), fractional.end(), mag);
        numer = approx.p[static_cast<std::size_t>(it - fractional.begin())];
      }
      piece[i] = sgn(normalized[i]) < 0 ? Int(-numer) : numer;
    }
    for (std::size_t i = 0; i < r; ++i) {
      residual[i] = Rational(approx.q) * normalized[i] - Rational(piece[i]);
    }
    pieces.push_back(std::move(piece));
  }

  std::vector<Int> out(r, 0);
  if (pieces.empty()) return out;
  Int largest_piece = 0;
  for (const auto& piece : pieces) {
    for (const auto& x : piece) largest_piece = std::max(largest_piece, Int(abs(x)));
  }
  // |piece . b| <= N * largest_piece < radix, so earlier pieces dominate.
  const Int radix = N * largest_piece + 1;
  for (const auto& piece : pieces) {
    for (std::size_t i = 0; i < r; ++i) out[i] = out[i] * radix + piece[i];
  }
  return out;
}

std::vector<Int> frank_tardos_reduce(std::span<const Int> w, const Nat& N) {
  std::vector<Rational> as_rational(w.begin(), w.end());
  return frank_tardos_reduce(std::span<const Rational>(as_rational), N);
}

Nat frank_tardos_norm_bound(std::size_t r, const Nat& N) {
  return pow_ui(2, 4 * r * r * r) * pow_int(N, r * r + 2 * r);
}

}  // namespace knapkern
