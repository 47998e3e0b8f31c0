#include "doctest.h"
#include "oracles.hpp"

#include "knapkern/bigint.hpp"
#include "knapkern/error.hpp"
#include "knapkern/restricted.hpp"
#include "knapkern/rng.hpp"
#include "knapkern/types.hpp"

using namespace knapkern;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected knapkern::Error");
  return ErrorCode::schema;
}

}  // namespace

TEST_CASE("big integer helpers") {
  CHECK(bit_length(Int(0)) == 0);
  CHECK(bit_length(Int(1)) == 1);
  CHECK(bit_length(Int(-8)) == 4);
  CHECK(bit_length(255ull) == 8);
  CHECK(pow_ui(7, 6) == 117649);
  CHECK(to_decimal(pow_ui(2, 100)) == "1267650600228229401496703205376");
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);

  CHECK(parse_natural("0") == Nat(0));
  CHECK(parse_natural("137256") == Nat(137256));
  CHECK_FALSE(parse_natural(""));
  CHECK_FALSE(parse_natural("007"));
  CHECK_FALSE(parse_natural("-3"));
  CHECK_FALSE(parse_natural("1e3"));
  CHECK_FALSE(parse_natural(" 5"));

  const Nat big = pow_ui(2, 127) + 12345;
  CHECK(fits_u128(big));
  CHECK(from_u128(to_u128(big)) == big);
  CHECK_FALSE(fits_u128(pow_ui(2, 128)));
  CHECK(fits_u128(pow_ui(2, 128) - 1));
}

TEST_CASE("restricted target") {
  CHECK(restricted_target(1) == 84);
  CHECK(restricted_target(2) == 137256);
  for (unsigned n = 1; n <= 20; ++n) {
    CHECK(restricted_target(n) == oracle::target(n));
    CHECK(restricted_target(n) % 2 == 0);
  }
  CHECK(code_of([] { restricted_target(0); }) == ErrorCode::precondition);
}

TEST_CASE("universe membership examples") {
  auto w = membership_in_restricted_universe(84, 1);
  REQUIRE(w);
  CHECK(*w == UniverseWitness{1, 2, 3});
  w = membership_in_restricted_universe(12, 1);
  REQUIRE(w);
  CHECK(*w == UniverseWitness{1, 1, 1});
  CHECK_FALSE(membership_in_restricted_universe(85, 1));
  CHECK_FALSE(membership_in_restricted_universe(0, 1));
  // 4^4 * 3 has digit 3 above position 3n.
  CHECK_FALSE(membership_in_restricted_universe(768, 1));
  // Digit sum 4.
  CHECK_FALSE(membership_in_restricted_universe(4 + 16 + 64 + 64, 1));
}

TEST_CASE("universe enumeration") {
  const auto u1 = enumerate_restricted_universe(1);
  CHECK(u1 == std::vector<Nat>{12, 24, 36, 48, 72, 84, 96, 132, 144, 192});
  const auto u2 = enumerate_restricted_universe(2);
  CHECK(u2.size() == 56);
  CHECK(u2.front() == 21);
  CHECK(u2.back() == 352947);
  for (unsigned n = 1; n <= 6; ++n) {
    const auto u = enumerate_restricted_universe(n);
    CHECK(u.size() == binomial(3 * n + 2, 3).get_ui());
    const auto ref = oracle::universe(n);
    CHECK(std::vector<Nat>(ref.begin(), ref.end()) == u);
  }
  CHECK(code_of([] { enumerate_restricted_universe(10001); }) == ErrorCode::guard);
}

TEST_CASE("membership agrees with enumeration, every value up to 3(3n+1)^{3n} for n <= 2") {
  for (unsigned n = 1; n <= 2; ++n) {
    const auto members = oracle::universe(n);
    const unsigned long limit = 3 * oracle::power(3 * n + 1, 3 * n).get_ui();
    unsigned long mismatches = 0;
    for (unsigned long a = 0; a <= limit; ++a) {
      const bool in = membership_in_restricted_universe(Nat(a), n).has_value();
      if (in != (members.count(Nat(a)) > 0)) ++mismatches;
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("membership agrees with enumeration for n = 3 around every member and on samples") {
  const unsigned n = 3;
  const auto members = oracle::universe(n);
  const Nat limit = 3 * oracle::power(10, 9);
  unsigned long mismatches = 0;
  auto check = [&](const Nat& a) {
    if (a < 0 || a > limit) return;
    const auto w = membership_in_restricted_universe(a, n);
    if (w.has_value() != (members.count(a) > 0)) ++mismatches;
    if (w) {
      const Nat back = oracle::power(10, (*w)[0]) + oracle::power(10, (*w)[1]) + oracle::power(10, (*w)[2]);
      if (back != a || (*w)[0] > (*w)[1] || (*w)[1] > (*w)[2]) ++mismatches;
    }
  };
  for (const auto& m : members) {
    for (long d = -12; d <= 12; ++d) check(m + d);
    for (long d : {-100, 100, -1000, 1000, -1000000, 1000000}) check(m + d);
  }
  Rng rng(2024);
  for (int s = 0; s < 200000; ++s) check(rng.uniform(Nat(0), limit));
  CHECK(mismatches == 0);
}

TEST_CASE("digit solutions") {
  using V = std::vector<std::vector<unsigned>>;
  CHECK(digit_solutions(21, 4, 3) == V{{1, 1, 1}});
  CHECK(digit_solutions(0, 4, 3) == V{{0, 0, 0}});
  CHECK(digit_solutions(5, 2, 2) == V{{1, 2}});
  // 4 = 0*1 + 2*2 = 2*1 + 1*2 = 4*1 is out of range for b = 2.
  CHECK(digit_solutions(4, 2, 2) == V{{0, 2}, {2, 1}});
  CHECK(code_of([] { digit_solutions(1, 9, 8); }) == ErrorCode::guard);
}

TEST_CASE("unique digit solution") {
  for (unsigned b = 2; b <= 7; ++b) {
    for (unsigned k = 1; k <= 5; ++k) {
      Nat value = 0;
      for (unsigned i = 0; i < k; ++i) value += oracle::power(b, i);
      const auto sols = digit_solutions(value, b, k);
      REQUIRE(sols.size() == 1);
      CHECK(sols.front() == std::vector<unsigned>(k, 1));
    }
  }
}

TEST_CASE("digit solutions match plain enumeration") {
  for (unsigned b = 2; b <= 4; ++b) {
    for (unsigned k = 1; k <= 4; ++k) {
      for (unsigned long value = 0; value <= 60; ++value) {
        std::vector<std::vector<unsigned>> ref;
        std::vector<unsigned> x(k, 0);
        while (true) {
          unsigned long s = 0, place = 1;
          for (unsigned i = 0; i < k; ++i, place *= b) s += x[i] * place;
          if (s == value) ref.push_back(x);
          // Odometer with x_{k-1} fastest so ref comes out ascending.
          std::size_t i = k;
          while (i > 0 && x[i - 1] == b) x[--i] = 0;
          if (i == 0) break;
          ++x[i - 1];
        }
        CHECK(digit_solutions(Nat(value), b, k) == ref);
      }
    }
  }
}

TEST_CASE("restricted subset sum validation") {
  CHECK_NOTHROW(RestrictedSubsetSumInstance(1, {84, 84, 84}));
  CHECK_NOTHROW(RestrictedSubsetSumInstance(1, {12, 48, 192}));
  CHECK(code_of([] { RestrictedSubsetSumInstance(1, {84, 84}); }) == ErrorCode::invariant);
  CHECK(code_of([] { RestrictedSubsetSumInstance(1, {85, 83, 84}); }) == ErrorCode::invariant);
  CHECK(code_of([] { RestrictedSubsetSumInstance(1, {84, 84, 12}); }) == ErrorCode::invariant);
  CHECK(code_of([] { RestrictedSubsetSumInstance(0, {}); }) == ErrorCode::invariant);
}

TEST_CASE("x3c validation") {
  CHECK_NOTHROW(X3CInstance(1, {{1, 2, 3}, {3, 2, 1}, {2, 1, 3}}));
  const X3CInstance sorted(1, {{3, 1, 2}, {1, 2, 3}, {1, 2, 3}});
  CHECK(sorted.triples()[0] == Triple{1, 2, 3});
  CHECK(code_of([] { X3CInstance(1, {{1, 2, 3}, {1, 2, 3}}); }) == ErrorCode::invariant);
  CHECK(code_of([] { X3CInstance(1, {{1, 1, 3}, {2, 2, 3}, {1, 2, 3}}); }) == ErrorCode::invariant);
  CHECK(code_of([] { X3CInstance(2, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {4, 5, 6}, {4, 5, 6}, {4, 5, 7}}); }) ==
        ErrorCode::invariant);
}

TEST_CASE("instance helpers") {
  KnapsackInstance inst{{{2, 3, {}}, {2, 3, {}}, {2, 7, {}}}, 5, 6};
  CHECK(count_distinct_weights(inst) == 1);
  CHECK(count_distinct_profits(inst) == 2);
  const std::vector<std::size_t> both{0, 2};
  CHECK(total_weight(inst, both) == 4);
  CHECK(total_profit(inst, both) == 10);
  CHECK(is_solution(inst, both));
  const std::vector<std::size_t> dup{0, 0};
  CHECK_FALSE(is_solution(inst, dup));
  const std::vector<std::size_t> all{0, 1, 2};
  CHECK_FALSE(is_solution(inst, all));
  CHECK(count_distinct_weights(KnapsackInstance{}) == 0);
}

TEST_CASE("rng matches the standard 64-bit Mersenne twister") {
  // The 10000th output of a default-seeded mt19937_64 is fixed by the C++ standard.
  Rng rng(5489);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng.next();
  CHECK(v == 9981545732273789042ull);

  Rng a(7), b(7);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.uniform(3, 11);
    CHECK(x == b.uniform(3, 11));
    CHECK(x >= 3);
    CHECK(x <= 11);
  }
  const Nat hi = pow_ui(2, 200);
  for (int i = 0; i < 200; ++i) {
    const Nat x = a.uniform(Nat(5), hi);
    CHECK(x >= 5);
    CHECK(x <= hi);
  }
  CHECK(a.uniform(Nat(9), Nat(9)) == 9);
}
