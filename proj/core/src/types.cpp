#include "knapkern/types.hpp"

#include <algorithm>
#include <set>

#include "knapkern/error.hpp"

namespace knapkern {

namespace {

void check_index(const KnapsackInstance& inst, std::size_t index) {
  if (index >= inst.items.size()) {
    fail(ErrorCode::precondition, "item index " + std::to_string(index) + " out of range");
  }
}

struct NatLess {
  bool operator()(const Nat& a, const Nat& b) const { return cmp(a, b) < 0; }
};

}  // namespace

X3CInstance::X3CInstance(unsigned n, std::vector<Triple> triples)
    : n_(n), triples_(std::move(triples)) {
  if (n_ == 0) fail(ErrorCode::invariant, "x3c: n must be positive");
  const unsigned universe = 3 * n_;
  std::vector<unsigned> occurrences(universe + 1, 0);
  for (std::size_t t = 0; t < triples_.size(); ++t) {
    auto& triple = triples_[t];
    std::sort(triple.begin(), triple.end());
    if (triple[0] == triple[1] || triple[1] == triple[2]) {
      fail(ErrorCode::invariant, "x3c: triple " + std::to_string(t) + " repeats an element");
    }
    for (unsigned e : triple) {
      if (e < 1 || e > universe) {
        fail(ErrorCode::invariant, "x3c: element " + std::to_string(e) + " outside {1.." +
                                       std::to_string(universe) + "}");
      }
      ++occurrences[e];
    }
  }
  for (unsigned e = 1; e <= universe; ++e) {
    if (occurrences[e] != 3) {
      fail(ErrorCode::invariant, "x3c: element " + std::to_string(e) + " occurs " +
                                     std::to_string(occurrences[e]) + " times, expected 3");
    }
  }
}

Nat total_weight(const KnapsackInstance& inst, std::span<const std::size_t> chosen) {
  Nat sum = 0;
  for (std::size_t index : chosen) {
    check_index(inst, index);
    sum += inst.items[index].weight;
  }
  return sum;
}

Nat total_profit(const KnapsackInstance& inst, std::span<const std::size_t> chosen) {
  Nat sum = 0;
  for (std::size_t index : chosen) {
    check_index(inst, index);
    sum += inst.items[index].profit;
  }
  return sum;
}

bool is_solution(const KnapsackInstance& inst, std::span<const std::size_t> chosen) {
  std::set<std::size_t> seen;
  for (std::size_t index : chosen) {
    if (index >= inst.items.size() || !seen.insert(index).second) return false;
  }
  return total_weight(inst, chosen) <= inst.capacity && total_profit(inst, chosen) >= inst.target;
}

std::size_t count_distinct_weights(const KnapsackInstance& inst) {
  std::set<Nat, NatLess> values;
  for (const auto& item : inst.items) values.insert(item.weight);
  return values.size();
}

std::size_t count_distinct_profits(const KnapsackInstance& inst) {
  std::set<Nat, NatLess> values;
  for (const auto& item : inst.items) values.insert(item.profit);
  return values.size();
}

}  // namespace knapkern
