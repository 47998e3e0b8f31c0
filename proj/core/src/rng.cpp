#include "knapkern/rng.hpp"

#include <bit>

#include "knapkern/error.hpp"

namespace knapkern {

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) fail(ErrorCode::precondition, "rng: empty range");
  const std::uint64_t span = hi - lo;
  if (span == ~std::uint64_t{0}) return next();
  const unsigned bits = static_cast<unsigned>(std::bit_width(span));
  const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  for (;;) {
    const std::uint64_t draw = next() & mask;
    if (draw <= span) return lo + draw;
  }
}

Nat Rng::uniform(const Nat& lo, const Nat& hi) {
  if (lo > hi) fail(ErrorCode::precondition, "rng: empty range");
  const Nat span = hi - lo;
  const std::size_t bits = bit_length(span);
  const std::size_t words = (bits + 63) / 64;
  for (;;) {
    Nat draw = 0;
    for (std::size_t w = 0; w < words; ++w) {
      draw <<= 64;
      draw += from_u128(next());
    }
    draw >>= words * 64 - bits;
    if (draw <= span) return lo + draw;
  }
}

}  // namespace knapkern
