#include <set>

#include "doctest.h"

#include "knapkern/error.hpp"
#include "knapkern/verify.hpp"

using namespace knapkern;

TEST_CASE("pattern schedule") {
  CHECK(compose_patterns(2, 16, 0) == std::vector<std::uint64_t>{0, 1, 2, 3});
  const auto four = compose_patterns(4, 16, 0);
  CHECK(four.size() == 16);
  CHECK(std::vector<std::uint64_t>(four.begin(), four.begin() + 5) == std::vector<std::uint64_t>{0, 1, 2, 4, 8});
  const auto eight = compose_patterns(8, 0, 0);
  CHECK(eight.size() == 9);
  const auto sampled = compose_patterns(8, 20, 5);
  CHECK(sampled.size() == 20);
  CHECK(std::set<std::uint64_t>(sampled.begin(), sampled.end()).size() == 20);
  CHECK(compose_patterns(8, 20, 5) == sampled);
}

TEST_CASE("admissible range") {
  CHECK(compose_oracle_admissible(2, 1));
  CHECK(compose_oracle_admissible(8, 1));
  CHECK(compose_oracle_admissible(4, 2));
  CHECK_FALSE(compose_oracle_admissible(8, 2));
  CHECK_FALSE(compose_oracle_admissible(16, 1));
  CHECK_FALSE(compose_oracle_admissible(3, 1));
  CHECK_THROWS_AS(verify_compose(16, 1, 0, 0), Error);
}

TEST_CASE("t = 2, n = 1 passes every pattern") {
  const auto v = verify_compose(2, 1, 16, 0);
  REQUIRE(v.outcomes.size() == 4);
  CHECK(v.passed());
  for (const auto& o : v.outcomes) {
    CHECK(o.cross_checked);
    CHECK(o.verdict == (o.pattern != 0));
    CHECK(o.quadratization_part_ok);
  }
}

TEST_CASE("inputs depend only on slot and label") {
  CHECK(compose_input(2, 7, 1, true).numbers() == compose_input(2, 7, 1, true).numbers());
  const auto a = verify_pattern(4, 1, 3, 0);
  CHECK_FALSE(a.verdict);
  CHECK(a.passed());
}
