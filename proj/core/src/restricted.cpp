#include "knapkern/restricted.hpp"

#include <algorithm>
#include <string>

#include "knapkern/error.hpp"
#include "knapkern/types.hpp"

namespace knapkern {

Nat restricted_target(unsigned n) {
  if (n == 0) fail(ErrorCode::precondition, "restricted_target: n must be positive");
  const unsigned long base = 3ul * n + 1;
  Nat sum = 0;
  Nat power = 1;
  for (unsigned j = 1; j <= 3 * n; ++j) {
    power *= base;
    sum += power;
  }
  return sum;
}

std::vector<unsigned long> digits_in_base(const Nat& value, unsigned long base) {
  if (base < 2) fail(ErrorCode::precondition, "digits_in_base: base must be at least 2");
  if (sgn(value) < 0) fail(ErrorCode::precondition, "digits_in_base: negative value");
  std::vector<unsigned long> digits;
  Nat rest = value;
  while (rest != 0) {
    digits.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), base));
  }
  return digits;
}

std::optional<UniverseWitness> membership_in_restricted_universe(const Nat& a, unsigned n) {
  if (n == 0) fail(ErrorCode::precondition, "membership: n must be positive");
  if (sgn(a) <= 0) return std::nullopt;
  const auto digits = digits_in_base(a, 3ul * n + 1);
  if (digits.empty() || digits[0] != 0 || digits.size() > 3ul * n + 1) return std::nullopt;
  UniverseWitness witness{};
  unsigned filled = 0;
  for (std::size_t position = 1; position < digits.size(); ++position) {
    if (digits[position] > 3 || filled + digits[position] > 3) return std::nullopt;
    for (unsigned long c = 0; c < digits[position]; ++c) {
      witness[filled++] = static_cast<unsigned>(position);
    }
  }
  if (filled != 3) return std::nullopt;
  return witness;
}

std::vector<Nat> enumerate_restricted_universe(unsigned n) {
  if (n == 0 || n > kUniverseEnumerationGuard) {
    fail(ErrorCode::guard, "enumerate_restricted_universe: n outside 1.." +
                               std::to_string(kUniverseEnumerationGuard));
  }
  const unsigned top = 3 * n;
  std::vector<Nat> powers(top + 1);
  powers[0] = 1;
  for (unsigned j = 1; j <= top; ++j) powers[j] = powers[j - 1] * (3ul * n + 1);
  std::vector<Nat> out;
  out.reserve(static_cast<std::size_t>(top) * (top + 1) * (top + 2) / 6);
  // Distinct multisets give distinct values (digits never carry), so no
  // deduplication pass is needed.
  for (unsigned j1 = 1; j1 <= top; ++j1) {
    for (unsigned j2 = j1; j2 <= top; ++j2) {
      for (unsigned j3 = j2; j3 <= top; ++j3) {
        out.push_back(powers[j1] + powers[j2] + powers[j3]);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Nat& x, const Nat& y) { return cmp(x, y) < 0; });
  return out;
}

std::vector<std::vector<unsigned>> digit_solutions(const Nat& value, unsigned base, unsigned k) {
  if (base < 2 || k < 1) fail(ErrorCode::precondition, "digit_solutions: need b >= 2 and k >= 1");
  unsigned long long space = 1;
  for (unsigned i = 0; i < k; ++i) {
    space *= base + 1ull;
    if (space > kDigitSolutionsGuard) {
      fail(ErrorCode::guard, "digit_solutions: (b+1)^k exceeds 10^7");
    }
  }
  std::vector<Nat> powers(k);
  powers[0] = 1;
  for (unsigned i = 1; i < k; ++i) powers[i] = powers[i - 1] * base;

  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> x(k, 0);
  // Odometer with x_0 as the most significant position gives lexicographic order.
  for (unsigned long long step = 0; step < space; ++step) {
    Nat sum = 0;
    for (unsigned i = 0; i < k; ++i) sum += powers[i] * x[i];
    if (sum == value) out.push_back(x);
    for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
      if (x[i] < base) {
        ++x[i];
        break;
      }
      x[i] = 0;
    }
  }
  return out;
}

RestrictedSubsetSumInstance::RestrictedSubsetSumInstance(unsigned n, std::vector<Nat> numbers)
    : n_(n), numbers_(std::move(numbers)) {
  if (n_ == 0) fail(ErrorCode::invariant, "rss: n must be positive");
  if (numbers_.size() != 3ul * n_) {
    fail(ErrorCode::invariant, "rss: expected " + std::to_string(3 * n_) + " numbers, got " +
                                   std::to_string(numbers_.size()));
  }
  Nat sum = 0;
  for (std::size_t j = 0; j < numbers_.size(); ++j) {
    if (!membership_in_restricted_universe(numbers_[j], n_)) {
      fail(ErrorCode::invariant, "rss: number " + to_decimal(numbers_[j]) + " at position " +
                                     std::to_string(j) + " is not in the restricted universe");
    }
    sum += numbers_[j];
  }
  if (sum != 3 * restricted_target(n_)) {
    fail(ErrorCode::invariant, "rss: numbers sum to " + to_decimal(sum) + ", expected 3*B_n = " +
                                   to_decimal(3 * restricted_target(n_)));
  }
}

}  // namespace knapkern
