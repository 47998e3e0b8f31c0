#include "knapkern/kernel.hpp"

#include <algorithm>
#include <numeric>

#include "knapkern/error.hpp"
#include "knapkern/frank_tardos.hpp"
#include "knapkern/solvers.hpp"

namespace knapkern {

namespace {

bool nat_less(const Nat& a, const Nat& b) { return cmp(a, b) < 0; }

std::vector<Nat> sorted_distinct(std::vector<Nat> values) {
  std::sort(values.begin(), values.end(), nat_less);
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::size_t position_of(const std::vector<Nat>& sorted, const Nat& value) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), value, nat_less) -
                                  sorted.begin());
}

struct Variable {
  std::size_t index;
  Nat weight;
  Nat profit;
  unsigned long bound;
};

// Depth-first search over variables ordered by profit density.
class GroupedSearch {
 public:
  GroupedSearch(std::vector<Variable> vars, Nat capacity, Nat target, unsigned long long budget)
      : vars_(std::move(vars)),
        capacity_(std::move(capacity)),
        target_(std::move(target)),
        budget_(budget),
        values_(vars_.size(), 0) {}

  bool run() {
    if (target_ <= 0) return true;
    return descend(0, 0, 0);
  }

  const std::vector<unsigned long>& values() const { return values_; }

 private:
  // Floor of the fractional relaxation over vars_[from..] with `room` capacity.
  Nat profit_bound(std::size_t from, const Nat& room) const {
    Nat bound = 0;
    Nat left = room;
    for (std::size_t v = from; v < vars_.size(); ++v) {
      const Nat all_weight = vars_[v].weight * vars_[v].bound;
      if (all_weight <= left) {
        bound += vars_[v].profit * vars_[v].bound;
        left -= all_weight;
      } else {
        bound += left * vars_[v].profit / vars_[v].weight;
        break;
      }
    }
    return bound;
  }

  bool descend(std::size_t v, const Nat& weight, const Nat& profit) {
    if (++nodes_ > budget_) fail(ErrorCode::budget, "solve_grouped: node budget exhausted");
    if (profit >= target_) return true;
    if (v == vars_.size()) return false;
    const Nat room = capacity_ - weight;
    if (profit + profit_bound(v, room) < target_) return false;

    const auto& var = vars_[v];
    unsigned long top = var.bound;
    if (var.weight > 0) {
      const Nat fit = room / var.weight;
      if (fit < top) top = fit.get_ui();
    }
    for (unsigned long x = top + 1; x-- > 0;) {
      values_[v] = x;
      if (descend(v + 1, weight + var.weight * x, profit + var.profit * x)) return true;
    }
    values_[v] = 0;
    return false;
  }

  std::vector<Variable> vars_;
  Nat capacity_;
  Nat target_;
  unsigned long long budget_;
  unsigned long long nodes_ = 0;
  std::vector<unsigned long> values_;
};

}  // namespace

std::size_t GroupedInstance::item_count() const noexcept {
  std::size_t total = 0;
  for (const auto& row : multiplicity) total += std::accumulate(row.begin(), row.end(), std::size_t{0});
  return total;
}

GroupedInstance group(const KnapsackInstance& inst) {
  GroupedInstance g;
  std::vector<Nat> ws, ps;
  for (const auto& item : inst.items) {
    ws.push_back(item.weight);
    ps.push_back(item.profit);
  }
  g.weights = sorted_distinct(std::move(ws));
  g.profits = sorted_distinct(std::move(ps));
  g.multiplicity.assign(g.weights.size(), std::vector<unsigned long>(g.profits.size(), 0));
  for (const auto& item : inst.items) {
    ++g.multiplicity[position_of(g.weights, item.weight)][position_of(g.profits, item.profit)];
  }
  g.capacity = inst.capacity;
  g.target = inst.target;
  return g;
}

ReducedILP reduce_ilp(const GroupedInstance& g) {
  const std::size_t r = g.variable_count();
  const Nat N = Nat(static_cast<unsigned long>(g.item_count())) + 1;
  std::vector<Int> weight_row(r + 1), profit_row(r + 1);
  for (std::size_t i = 0; i < g.weights.size(); ++i) {
    for (std::size_t j = 0; j < g.profits.size(); ++j) {
      weight_row[g.variable(i, j)] = g.weights[i];
      profit_row[g.variable(i, j)] = -g.profits[j];
    }
  }
  weight_row[r] = -g.capacity;
  profit_row[r] = g.target;

  const auto reduced_w = frank_tardos_reduce(std::span<const Int>(weight_row), N);
  const auto reduced_p = frank_tardos_reduce(std::span<const Int>(profit_row), N);

  ReducedILP out;
  out.weights.assign(reduced_w.begin(), reduced_w.begin() + static_cast<std::ptrdiff_t>(r));
  out.capacity = -reduced_w[r];
  out.profits.resize(r);
  for (std::size_t v = 0; v < r; ++v) out.profits[v] = -reduced_p[v];
  out.target = reduced_p[r];
  out.bounds.resize(r);
  for (std::size_t i = 0; i < g.weights.size(); ++i) {
    for (std::size_t j = 0; j < g.profits.size(); ++j) {
      out.bounds[g.variable(i, j)] = g.multiplicity[i][j];
    }
  }
  return out;
}

std::vector<unsigned long> binary_split(unsigned long bound) {
  std::vector<unsigned long> out;
  unsigned long covered = 0;  // 2^s - 1
  for (unsigned long c = 1; covered + c <= bound; c <<= 1) {
    out.push_back(c);
    covered += c;
  }
  if (bound > covered) out.push_back(bound - covered);
  return out;
}

KnapsackInstance ilp_to_knapsack(const ReducedILP& ilp) {
  const std::size_t r = ilp.bounds.size();
  if (ilp.weights.size() != r || ilp.profits.size() != r) {
    fail(ErrorCode::precondition, "ilp_to_knapsack: dimension mismatch");
  }
  if (sgn(ilp.capacity) < 0 || sgn(ilp.target) < 0) {
    fail(ErrorCode::precondition, "ilp_to_knapsack: negative capacity or target");
  }
  KnapsackInstance out;
  for (std::size_t v = 0; v < r; ++v) {
    if (ilp.bounds[v] == 0) continue;
    if (sgn(ilp.weights[v]) < 0 || sgn(ilp.profits[v]) < 0) {
      fail(ErrorCode::precondition, "ilp_to_knapsack: negative reduced coefficient");
    }
    for (unsigned long c : binary_split(ilp.bounds[v])) {
      out.items.push_back(Item{ilp.weights[v] * c, ilp.profits[v] * c, {}});
    }
  }
  out.capacity = ilp.capacity;
  out.target = ilp.target;
  return out;
}

GroupedSolution solve_grouped(const GroupedInstance& g, unsigned long long node_budget) {
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < g.weights.size(); ++i) {
    for (std::size_t j = 0; j < g.profits.size(); ++j) {
      if (g.multiplicity[i][j] == 0 || g.profits[j] == 0) continue;
      vars.push_back(Variable{g.variable(i, j), g.weights[i], g.profits[j], g.multiplicity[i][j]});
    }
  }
  // Density order p_a / w_a > p_b / w_b; zero weights first.
  std::stable_sort(vars.begin(), vars.end(), [](const Variable& a, const Variable& b) {
    return a.profit * b.weight > b.profit * a.weight;
  });

  GroupedSearch search(vars, g.capacity, g.target, node_budget);
  GroupedSolution out;
  out.assignment.assign(g.variable_count(), 0);
  if (!search.run()) return out;
  out.feasible = true;
  out.weight = 0;
  out.profit = 0;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    out.assignment[vars[v].index] = search.values()[v];
    out.weight += vars[v].weight * search.values()[v];
    out.profit += vars[v].profit * search.values()[v];
  }
  return out;
}

SolverResult solve_grouped_items(const KnapsackInstance& inst) {
  const auto g = group(inst);
  const auto solution = solve_grouped(g);
  SolverResult out;
  if (!solution.feasible) return out;
  auto remaining = solution.assignment;
  for (std::size_t idx = 0; idx < inst.items.size(); ++idx) {
    const auto& item = inst.items[idx];
    auto& left = remaining[g.variable(position_of(g.weights, item.weight),
                                      position_of(g.profits, item.profit))];
    if (left > 0) {
      --left;
      out.chosen.push_back(idx);
    }
  }
  out.feasible = true;
  out.weight = total_weight(inst, out.chosen);
  out.profit = total_profit(inst, out.chosen);
  return out;
}

std::size_t encoding_bits(const KnapsackInstance& inst) {
  std::size_t bits = bit_length(inst.capacity) + bit_length(inst.target);
  for (const auto& item : inst.items) bits += bit_length(item.weight) + bit_length(item.profit);
  return bits;
}

KnapsackInstance canonical_yes_instance() {
  KnapsackInstance out;
  out.items.push_back(Item{1, 1, {}});
  out.capacity = 1;
  out.target = 1;
  return out;
}

KnapsackInstance canonical_no_instance() {
  KnapsackInstance out;
  out.capacity = 0;
  out.target = 1;
  return out;
}

KernelResult kernelize(const KnapsackInstance& inst) {
  const auto g = group(inst);
  KernelResult out;
  out.report.r = g.variable_count();
  out.report.input_bits = encoding_bits(inst);
  const std::size_t r = out.report.r;
  const std::size_t lg_n = bit_length(static_cast<unsigned long long>(inst.items.size()));
  const std::size_t lg_r = bit_length(static_cast<unsigned long long>(r));

  if (r * lg_r <= lg_n) {
    out.report.branch = KernelBranch::solved;
    bool feasible = false;
    try {
      feasible = solve_grouped(g).feasible;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::budget) throw;
      feasible = solve_meet_in_middle(inst).feasible;
    }
    out.instance = feasible ? canonical_yes_instance() : canonical_no_instance();
  } else {
    out.report.branch = KernelBranch::reduced;
    out.instance = ilp_to_knapsack(reduce_ilp(g));
  }
  out.report.output_bits = encoding_bits(out.instance);
  return out;
}

}  // namespace knapkern
