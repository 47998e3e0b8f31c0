#include "knapkern/bigint.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace knapkern {

Int pow_int(const Int& base, unsigned long exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Int pow_ui(unsigned long base, unsigned long exponent) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

std::size_t bit_length(const Int& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

std::size_t bit_length(unsigned long long value) {
  return static_cast<std::size_t>(std::bit_width(value));
}

std::string to_decimal(const Int& value) { return value.get_str(10); }

std::optional<Nat> parse_natural(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  if (text.size() > 1 && text.front() == '0') return std::nullopt;
  return Nat(std::string(text), 10);
}

bool fits_u128(const Nat& value) { return sgn(value) >= 0 && bit_length(value) <= 128; }

u128 to_u128(const Nat& value) {
  if (!fits_u128(value)) throw std::out_of_range("value does not fit in 128 bits");
  u128 out = 0;
  std::size_t count = 0;
  unsigned long long words[2] = {0, 0};
  mpz_export(words, &count, -1, sizeof(unsigned long long), 0, 0, value.get_mpz_t());
  out = (static_cast<u128>(words[1]) << 64) | words[0];
  return out;
}

Nat from_u128(u128 value) {
  unsigned long long words[2] = {static_cast<unsigned long long>(value),
                                 static_cast<unsigned long long>(value >> 64)};
  Nat out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(unsigned long long), 0, 0, words);
  return out;
}

Nat binomial(unsigned long n, unsigned long k) {
  Nat out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace knapkern
