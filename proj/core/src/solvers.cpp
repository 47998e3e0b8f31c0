#include "knapkern/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "knapkern/error.hpp"

namespace knapkern {

namespace {

using Mask = unsigned long long;

// Item data in the arithmetic type the search runs in. Capacity is already
// clamped to the total weight, so every subset sum is representable.
template <class Num>
struct Problem {
  std::vector<Num> weights;
  std::vector<Num> profits;
  Num capacity{};
};

template <class Num>
Num narrow(const Nat& value) {
  if constexpr (std::is_same_v<Num, u128>) {
    return to_u128(value);
  } else {
    return value;
  }
}

template <class Num>
Problem<Num> make_problem(const KnapsackInstance& inst, const Nat& capacity) {
  Problem<Num> out;
  out.weights.reserve(inst.items.size());
  out.profits.reserve(inst.items.size());
  for (const auto& item : inst.items) {
    out.weights.push_back(narrow<Num>(item.weight));
    out.profits.push_back(narrow<Num>(item.profit));
  }
  out.capacity = narrow<Num>(capacity);
  return out;
}

// Runs `search` on a u128 view when all sums fit, on exact big integers otherwise.
template <class Search>
auto dispatch(const KnapsackInstance& inst, Search&& search) {
  Nat total_w = 0, total_p = 0;
  for (const auto& item : inst.items) {
    if (sgn(item.weight) < 0 || sgn(item.profit) < 0) {
      fail(ErrorCode::precondition, "solver: negative weight or profit");
    }
    total_w += item.weight;
    total_p += item.profit;
  }
  if (sgn(inst.capacity) < 0) fail(ErrorCode::precondition, "solver: negative capacity");
  const Nat capacity = inst.capacity < total_w ? inst.capacity : total_w;
  if (fits_u128(total_w) && fits_u128(total_p)) return search(make_problem<u128>(inst, capacity));
  return search(make_problem<Nat>(inst, capacity));
}

SolverResult finish(const KnapsackInstance& inst, std::vector<std::size_t> chosen) {
  SolverResult out;
  out.weight = total_weight(inst, chosen);
  out.profit = total_profit(inst, chosen);
  out.feasible = out.weight <= inst.capacity && out.profit >= inst.target;
  if (out.feasible) {
    out.chosen = std::move(chosen);
  } else {
    out.weight = 0;
    out.profit = 0;
  }
  return out;
}

std::vector<std::size_t> mask_to_indices(Mask mask) {
  std::vector<std::size_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

// Visits every subset of `count` items in Gray-code order, maintaining
// running sums. `visit(mask, weight, profit)` sees the empty set first.
template <class Num, class Visit>
void gray_walk(const std::vector<Num>& weights, const std::vector<Num>& profits, std::size_t offset,
               std::size_t count, Visit&& visit) {
  Num w{}, p{};
  Mask mask = 0;
  visit(mask, w, p);
  const Mask end = Mask{1} << count;
  for (Mask step = 1; step < end; ++step) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(step));
    mask ^= Mask{1} << bit;
    if ((mask >> bit) & 1u) {
      w += weights[offset + bit];
      p += profits[offset + bit];
    } else {
      w -= weights[offset + bit];
      p -= profits[offset + bit];
    }
    visit(mask, w, p);
  }
}

template <class Num>
Mask brute_force_best(const Problem<Num>& pr) {
  Mask best = 0;
  Num best_profit{};
  gray_walk(pr.weights, pr.profits, 0, pr.weights.size(), [&](Mask mask, const Num& w, const Num& p) {
    if (w > pr.capacity) return;
    if (p > best_profit || (p == best_profit && lex_less_mask(mask, best))) {
      best = mask;
      best_profit = p;
    }
  });
  return best;
}

template <class Num>
Mask meet_in_middle_best(const Problem<Num>& pr) {
  const std::size_t m = pr.weights.size();
  const std::size_t left = m / 2;
  const std::size_t right = m - left;

  struct State {
    Num weight;
    Num profit;
  };
  std::vector<State> states;
  states.reserve(std::size_t{1} << right);
  gray_walk(pr.weights, pr.profits, left, right, [&](Mask, const Num& w, const Num& p) {
    if (w <= pr.capacity) states.push_back(State{w, p});
  });
  std::sort(states.begin(), states.end(),
            [](const State& a, const State& b) { return a.weight < b.weight; });
  // best[k] is the largest profit among the first k+1 states by weight.
  std::vector<Num> sorted_weights(states.size());
  std::vector<Num> best(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    sorted_weights[k] = states[k].weight;
    best[k] = (k > 0 && best[k - 1] > states[k].profit) ? best[k - 1] : states[k].profit;
  }
  // The empty right state has weight 0, so the position is never begin().
  auto best_partner = [&](const Num& w) -> const Num& {
    const Num room = pr.capacity - w;
    const auto it = std::upper_bound(sorted_weights.begin(), sorted_weights.end(), room);
    return best[static_cast<std::size_t>(it - sorted_weights.begin()) - 1];
  };

  Num optimum{};
  gray_walk(pr.weights, pr.profits, 0, left, [&](Mask, const Num& w, const Num& p) {
    if (w > pr.capacity) return;
    const Num total = p + best_partner(w);
    if (total > optimum) optimum = total;
  });

  // Among optimal subsets, the lexicographically smallest one. Two candidates
  // with different left parts compare by their left masks extended by one
  // bit above the left half when the right part is nonempty; the right part
  // is then the smallest compatible one.
  const Mask right_marker = Mask{1} << left;
  bool have = false;
  Mask best_key = 0;
  Mask best_left = 0;
  Num best_left_weight{}, best_left_profit{};
  gray_walk(pr.weights, pr.profits, 0, left, [&](Mask mask, const Num& w, const Num& p) {
    if (w > pr.capacity || p + best_partner(w) < optimum) return;
    const Mask key = mask | (p >= optimum ? Mask{0} : right_marker);
    if (!have || lex_less_mask(key, best_key)) {
      have = true;
      best_key = key;
      best_left = mask;
      best_left_weight = w;
      best_left_profit = p;
    }
  });
  if (best_left_profit >= optimum) return best_left;

  const Num room = pr.capacity - best_left_weight;
  const Num need = optimum - best_left_profit;
  bool found = false;
  Mask best_right = 0;
  gray_walk(pr.weights, pr.profits, left, right, [&](Mask mask, const Num& w, const Num& p) {
    if (w > room || p < need) return;
    if (!found || lex_less_mask(mask, best_right)) {
      found = true;
      best_right = mask;
    }
  });
  return best_left | (best_right << left);
}

}  // namespace

bool lex_less_mask(unsigned long long a, unsigned long long b) {
  while (a != 0 && b != 0) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

SolverResult solve_brute_force(const KnapsackInstance& inst) {
  if (inst.items.size() > kBruteForceMaxItems) {
    fail(ErrorCode::guard, "brute force: more than " + std::to_string(kBruteForceMaxItems) + " items");
  }
  const Mask best = dispatch(inst, [](const auto& pr) { return brute_force_best(pr); });
  return finish(inst, mask_to_indices(best));
}

SolverResult solve_meet_in_middle(const KnapsackInstance& inst) {
  if (inst.items.size() > kMeetInMiddleMaxItems) {
    fail(ErrorCode::guard,
         "meet in the middle: more than " + std::to_string(kMeetInMiddleMaxItems) + " items");
  }
  const Mask best = dispatch(inst, [](const auto& pr) { return meet_in_middle_best(pr); });
  return finish(inst, mask_to_indices(best));
}

SolverResult solve_dp_by_weight(const KnapsackInstance& inst) {
  Nat total_w = 0;
  for (const auto& item : inst.items) total_w += item.weight;
  const Nat clamped = inst.capacity < total_w ? inst.capacity : total_w;
  if (sgn(clamped) < 0 || clamped > Nat(static_cast<unsigned long>(kDpMaxCapacity))) {
    fail(ErrorCode::guard, "dp: capacity exceeds 10^7");
  }
  const std::size_t capacity = clamped.get_ui();
  const std::size_t m = inst.items.size();

  std::vector<std::size_t> weights(m);
  for (std::size_t i = 0; i < m; ++i) {
    // Items heavier than the table never fit; mark them with an unreachable weight.
    weights[i] = inst.items[i].weight <= clamped ? inst.items[i].weight.get_ui() : capacity + 1;
  }
  const std::size_t row = capacity + 1;
  // Suffix table over items i..m-1: `take` marks capacities where item i
  // lies on some optimal choice, `positive` where the optimum is nonzero.
  std::vector<bool> take(m * row, false);
  std::vector<bool> positive(m * row, false);

  auto run = [&](const auto& pr) {
    using Num = std::decay_t<decltype(pr.profits.front())>;
    std::vector<Num> suffix(row, Num{});
    for (std::size_t i = m; i-- > 0;) {
      const std::size_t w = weights[i];
      if (w <= capacity) {
        for (std::size_t c = capacity + 1; c-- > w;) {
          Num candidate = suffix[c - w] + pr.profits[i];
          if (candidate >= suffix[c]) {
            take[i * row + c] = true;
            suffix[c] = std::move(candidate);
          }
        }
      }
      for (std::size_t c = 0; c < row; ++c) positive[i * row + c] = suffix[c] > Num{};
    }
    // Greedy forward walk: stop once nothing more is needed, otherwise take
    // the first item that keeps the optimum reachable.
    std::vector<std::size_t> chosen;
    std::size_t c = capacity;
    for (std::size_t i = 0; i < m && positive[i * row + c]; ++i) {
      if (take[i * row + c]) {
        chosen.push_back(i);
        c -= weights[i];
      }
    }
    return chosen;
  };
  if (m == 0) return finish(inst, {});
  return finish(inst, dispatch(inst, run));
}

}  // namespace knapkern
