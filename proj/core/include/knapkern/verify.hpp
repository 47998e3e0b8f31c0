#pragma once

#include <cstdint>
#include <vector>

#include "knapkern/composition.hpp"
#include "knapkern/types.hpp"

namespace knapkern {

// Largest (t, n) the exact oracle is run on: t <= 8 for n = 1, t <= 4 for n = 2.
bool compose_oracle_admissible(unsigned t, unsigned n);

struct PatternOutcome {
  std::uint64_t pattern = 0;  // bit i set iff input i is a planted yes
  bool expected = false;      // OR of the labels
  bool verdict = false;       // exact oracle on the composed instance
  bool cross_checked = false; // brute force agreed as well
  // Index items of the witness form Z_i for a yes-labelled i (vacuous on no).
  bool index_part_ok = true;
  // Quadratization items of the witness are exactly Y_i (informational).
  bool quadratization_part_ok = true;
  // canonical_solution hits W and P exactly for every yes index.
  bool canonical_ok = true;
  std::vector<RestrictedSubsetSumInstance> inputs;

  bool passed() const noexcept { return expected == verdict && index_part_ok && canonical_ok; }
};

struct ComposeVerification {
  unsigned t = 0;
  unsigned n = 0;
  std::uint64_t seed = 0;
  YRule y_rule = YRule::widened;
  std::vector<PatternOutcome> outcomes;

  bool passed() const noexcept;
};

// The all-no pattern and every single-yes pattern, then the remaining
// patterns in ascending order when 2^t <= trials, otherwise distinct random
// patterns until `trials` patterns have been checked.
std::vector<std::uint64_t> compose_patterns(unsigned t, std::size_t trials, std::uint64_t seed);

// Input instance for slot `position` with the given label; depends only on
// (seed, n, position, label).
RestrictedSubsetSumInstance compose_input(unsigned n, std::uint64_t seed, std::size_t position,
                                          bool want_yes);

PatternOutcome verify_pattern(unsigned t, unsigned n, std::uint64_t seed, std::uint64_t pattern,
                              YRule y_rule = YRule::widened);

// Throws Error(guard) outside compose_oracle_admissible.
ComposeVerification verify_compose(unsigned t, unsigned n, std::size_t trials, std::uint64_t seed,
                                   YRule y_rule = YRule::widened);

}  // namespace knapkern
