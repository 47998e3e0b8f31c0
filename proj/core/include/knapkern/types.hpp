#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "knapkern/bigint.hpp"

namespace knapkern {

// Provenance tags for items built by the composition. Positions and
// instance indices are 0-based.
struct EncodingLabel {
  std::size_t instance = 0;
  std::size_t position = 0;
  bool operator==(const EncodingLabel&) const = default;
};

// Bit pattern (alpha, beta) of a quadratization item y^{alpha,beta}_{k,l}.
enum class QuadKind { one_zero, zero_one, one_one };

struct QuadratizationLabel {
  QuadKind kind = QuadKind::one_one;
  unsigned k = 0;
  unsigned l = 0;
  bool operator==(const QuadratizationLabel&) const = default;
};

struct IndexLabel {
  unsigned bit = 0;
  unsigned k = 0;
  bool operator==(const IndexLabel&) const = default;
};

using ItemLabel = std::variant<std::monostate, EncodingLabel, QuadratizationLabel, IndexLabel>;

struct Item {
  Nat weight;
  Nat profit;
  ItemLabel label;
};

struct KnapsackInstance {
  std::vector<Item> items;
  Nat capacity;  // W
  Nat target;    // P
};

struct SubsetSumInstance {
  std::vector<Nat> numbers;
  Nat target;
};

// Restricted Subset Sum: 3n numbers from the restricted universe summing to
// 3 * restricted_target(n). Duplicates are allowed. The constructor
// validates and throws Error(invariant) on violation.
class RestrictedSubsetSumInstance {
 public:
  RestrictedSubsetSumInstance(unsigned n, std::vector<Nat> numbers);

  unsigned n() const noexcept { return n_; }
  const std::vector<Nat>& numbers() const noexcept { return numbers_; }

 private:
  unsigned n_;
  std::vector<Nat> numbers_;
};

using Triple = std::array<unsigned, 3>;

// Restricted X3C: triples over {1..3n}, each element in exactly three
// triples (counting duplicates). Validated on construction.
class X3CInstance {
 public:
  X3CInstance(unsigned n, std::vector<Triple> triples);

  unsigned n() const noexcept { return n_; }
  const std::vector<Triple>& triples() const noexcept { return triples_; }

 private:
  unsigned n_;
  std::vector<Triple> triples_;
};

struct SolverResult {
  bool feasible = false;
  std::vector<std::size_t> chosen;  // ascending item indices; empty if infeasible
  Nat weight;
  Nat profit;
};

Nat total_weight(const KnapsackInstance& inst, std::span<const std::size_t> chosen);
Nat total_profit(const KnapsackInstance& inst, std::span<const std::size_t> chosen);

// True iff `chosen` is a set of valid, distinct indices meeting W and P.
bool is_solution(const KnapsackInstance& inst, std::span<const std::size_t> chosen);

std::size_t count_distinct_weights(const KnapsackInstance& inst);
std::size_t count_distinct_profits(const KnapsackInstance& inst);

}  // namespace knapkern
