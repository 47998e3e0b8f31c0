#include "knapkern/composition.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "knapkern/error.hpp"
#include "knapkern/restricted.hpp"

namespace knapkern {

namespace {

bool bit_of(std::size_t i, unsigned k) { return ((i >> k) & 1u) != 0; }

const Nat& layer_source(const Item& item, bool use_profit) {
  return use_profit ? item.profit : item.weight;
}

Nat layer_value(const Nat& value, const CompositionConstants& c, Layer layer) {
  Nat q;
  if (layer == Layer::Z) {
    mpz_fdiv_q(q.get_mpz_t(), value.get_mpz_t(), c.Z.get_mpz_t());
    return q;
  }
  Nat r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), c.Z.get_mpz_t());
  mpz_fdiv_q(q.get_mpz_t(), r.get_mpz_t(), c.Y.get_mpz_t());
  return q;
}

Nat layer_sum(const ComposedInstance& composed, std::span<const std::size_t> items, Layer layer,
              bool use_profit) {
  Nat sum = 0;
  for (std::size_t index : items) {
    if (index >= composed.knapsack.items.size()) {
      fail(ErrorCode::precondition, "layer: item index out of range");
    }
    sum += layer_value(layer_source(composed.knapsack.items[index], use_profit),
                       composed.constants, layer);
  }
  return sum;
}

// Gadget bounds the correctness argument relies on. A failure here is a
// construction bug, not bad input.
void check_magnitudes(const ComposedInstance& composed) {
  const auto& c = composed.constants;
  Nat encoding_weight = 0, encoding_profit = 0, max_encoding_profit = 0;
  Nat lower_weight = 0, lower_profit = 0;  // encoding + quadratization
  Nat residue_z_weight = 0, residue_z_profit = 0, residue_y_weight = 0;
  for (const auto& item : composed.knapsack.items) {
    const bool encoding = std::holds_alternative<EncodingLabel>(item.label);
    if (encoding) {
      encoding_weight += item.weight;
      encoding_profit += item.profit;
      if (item.profit > max_encoding_profit) max_encoding_profit = item.profit;
    }
    if (!std::holds_alternative<IndexLabel>(item.label)) {
      lower_weight += item.weight;
      lower_profit += item.profit;
    }
    Nat r;
    mpz_fdiv_r(r.get_mpz_t(), item.weight.get_mpz_t(), c.Z.get_mpz_t());
    residue_z_weight += r;
    Nat ry;
    mpz_fdiv_r(ry.get_mpz_t(), r.get_mpz_t(), c.Y.get_mpz_t());
    residue_y_weight += ry;
    mpz_fdiv_r(r.get_mpz_t(), item.profit.get_mpz_t(), c.Z.get_mpz_t());
    residue_z_profit += r;
  }
  auto require = [](bool ok, const char* what) {
    if (!ok) fail(ErrorCode::invariant, std::string("composition magnitude check failed: ") + what);
  };
  require(encoding_weight < c.Y, "Y > total encoding weight");
  require(max_encoding_profit < c.Y, "Y > every encoding profit");
  require(lower_weight < c.Z, "Z > total encoding and quadratization weight");
  require(lower_profit < c.Z, "Z > total encoding and quadratization profit");
  // Per-item floors coincide with floor-of-sum in these layers.
  require(residue_z_weight < c.Z, "weight residues below Z");
  require(residue_z_profit < c.Z, "profit residues below Z");
  require(residue_y_weight < c.Y, "weight residues below Y");
}

}  // namespace

CompositionConstants make_constants(unsigned t, unsigned n, YRule y_rule) {
  if (t < 2 || !std::has_single_bit(t)) {
    fail(ErrorCode::precondition, "composition: t must be a power of two >= 2");
  }
  if (n == 0) fail(ErrorCode::precondition, "composition: n must be positive");
  CompositionConstants c;
  c.t = t;
  c.n = n;
  c.lg_t = static_cast<unsigned>(std::countr_zero(t));
  const unsigned lg2 = c.lg_t * c.lg_t;
  c.restricted_target = restricted_target(n);
  c.X = Nat(3) * t * n * c.restricted_target;
  c.B = c.restricted_target + Nat(n) * c.X;
  c.y_rule = y_rule;
  c.Y = y_rule == YRule::narrow ? Nat(Nat(t) * t * 3 * n * c.B) : Nat(Nat(t) * t * 9 * n * c.B / 2);
  c.Z = Nat(lg2) * c.Y * c.Y * pow_ui(3, lg2);
  c.T = 0;
  for (unsigned k = 0; k < lg2; ++k) c.T += pow_ui(3, k);
  c.W = Nat(t - 1) * c.Z + c.T * c.Y + Nat(3 * t - 2) * c.B;
  c.P = c.W + binomial(t, 2) * 9 * n * c.B;
  if (mpz_odd_p(Nat(Nat(n) * c.B).get_mpz_t())) {
    fail(ErrorCode::invariant, "composition: n*B is odd; half-integral profits");
  }
  return c;
}

std::vector<RestrictedSubsetSumInstance> pad_to_power_of_two(
    std::span<const RestrictedSubsetSumInstance> instances) {
  if (instances.empty()) fail(ErrorCode::precondition, "pad: no instances");
  const unsigned n = instances.front().n();
  for (const auto& inst : instances) {
    if (inst.n() != n) fail(ErrorCode::precondition, "pad: instances have different n");
  }
  std::vector<RestrictedSubsetSumInstance> out(instances.begin(), instances.end());
  const std::size_t t = std::bit_ceil(std::max<std::size_t>(2, instances.size()));
  while (out.size() < t) out.push_back(instances.back());
  return out;
}

std::size_t quadratization_item_count(unsigned lg_t) {
  return 3ul * lg_t * (lg_t - (lg_t > 0 ? 1 : 0)) / 2 + lg_t;
}

std::vector<Item> build_encoding_items(std::span<const RestrictedSubsetSumInstance> instances,
                                       const CompositionConstants& c) {
  if (instances.size() != c.t) fail(ErrorCode::precondition, "encoding: expected t instances");
  std::vector<Item> items;
  items.reserve(3ul * c.n * c.t);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (instances[i].n() != c.n) fail(ErrorCode::precondition, "encoding: instance size mismatch");
    const Nat boost = Nat(3) * i * c.B;
    for (std::size_t j = 0; j < instances[i].numbers().size(); ++j) {
      Nat weight = c.X + instances[i].numbers()[j];
      Nat profit = weight + boost;
      items.push_back(Item{std::move(weight), std::move(profit), EncodingLabel{i, j}});
    }
  }
  return items;
}

std::vector<Item> build_quadratization_items(const CompositionConstants& c) {
  std::vector<Item> items;
  items.reserve(quadratization_item_count(c.lg_t));
  const Nat nine_nb = Nat(9) * c.n * c.B;
  for (unsigned k = 0; k < c.lg_t; ++k) {
    for (unsigned l = k + 1; l < c.lg_t; ++l) {
      const Nat lower = pow_ui(3, c.f(k, l)) * c.Y;
      const Nat upper = pow_ui(3, c.f(l, k)) * c.Y;
      items.push_back(Item{lower, lower, QuadratizationLabel{QuadKind::one_zero, k, l}});
      items.push_back(Item{upper, upper, QuadratizationLabel{QuadKind::zero_one, k, l}});
      const Nat both = lower + upper;
      items.push_back(Item{both, both + pow_ui(2, k + l) * nine_nb,
                           QuadratizationLabel{QuadKind::one_one, k, l}});
    }
  }
  const Nat nb = Nat(c.n) * c.B;
  const Nat half_nine_nb = nb * 9 / 2;   // 4.5 nB, exact since nB is even
  const Nat half_three_nb = nb * 3 / 2;  // 1.5 nB
  for (unsigned k = 0; k < c.lg_t; ++k) {
    const Nat weight = pow_ui(3, c.f(k, k)) * c.Y;
    Nat profit = weight + pow_ui(2, 2 * k) * half_nine_nb + pow_ui(2, k) * half_three_nb;
    items.push_back(Item{weight, std::move(profit), QuadratizationLabel{QuadKind::one_one, k, k}});
  }
  return items;
}

std::vector<Item> build_index_items(const CompositionConstants& c) {
  std::vector<Item> items;
  items.reserve(2ul * c.lg_t);
  for (unsigned k = 0; k < c.lg_t; ++k) {
    const Nat base = pow_ui(2, k) * c.Z;
    Nat zero = base;
    for (unsigned l = 0; l < c.lg_t; ++l) zero += pow_ui(3, c.f(k, l)) * c.Y;
    items.push_back(Item{zero, zero, IndexLabel{0, k}});
    const Nat one = base + pow_ui(2, k) * 3 * c.B;
    items.push_back(Item{one, one, IndexLabel{1, k}});
  }
  return items;
}

ComposedInstance compose(std::span<const RestrictedSubsetSumInstance> instances, YRule y_rule) {
  const auto padded = pad_to_power_of_two(instances);
  ComposedInstance out;
  out.input_count = instances.size();
  out.constants = make_constants(static_cast<unsigned>(padded.size()), padded.front().n(), y_rule);
  auto& items = out.knapsack.items;
  items = build_encoding_items(padded, out.constants);
  for (auto* family : {&build_quadratization_items, &build_index_items}) {
    auto more = (*family)(out.constants);
    items.insert(items.end(), std::make_move_iterator(more.begin()),
                 std::make_move_iterator(more.end()));
  }
  out.knapsack.capacity = out.constants.W;
  out.knapsack.target = out.constants.P;

  Nat encoding_profit = 0;
  for (const auto& item : items) {
    if (std::holds_alternative<EncodingLabel>(item.label)) encoding_profit += item.profit;
  }
  out.encoding_profit_below_y = encoding_profit < out.constants.Y;
  if (y_rule == YRule::widened && !out.encoding_profit_below_y) {
    fail(ErrorCode::invariant, "composition magnitude check failed: Y > total encoding profit");
  }
  check_magnitudes(out);
  return out;
}

std::vector<std::size_t> quadratization_selection(const ComposedInstance& composed, std::size_t i) {
  if (i >= composed.constants.t) fail(ErrorCode::precondition, "Y_i: index out of range");
  std::vector<std::size_t> out;
  const auto& items = composed.knapsack.items;
  for (std::size_t idx = 0; idx < items.size(); ++idx) {
    const auto* label = std::get_if<QuadratizationLabel>(&items[idx].label);
    if (label == nullptr) continue;
    const bool bk = bit_of(i, label->k);
    const bool bl = bit_of(i, label->l);
    bool wanted = false;
    switch (label->kind) {
      case QuadKind::one_zero: wanted = bk && !bl; break;
      case QuadKind::zero_one: wanted = !bk && bl; break;
      case QuadKind::one_one: wanted = bk && bl; break;
    }
    if (wanted) out.push_back(idx);
  }
  return out;
}

std::vector<std::size_t> index_selection(const ComposedInstance& composed, std::size_t i) {
  if (i >= composed.constants.t) fail(ErrorCode::precondition, "Z_i: index out of range");
  std::vector<std::size_t> out;
  const auto& items = composed.knapsack.items;
  for (std::size_t idx = 0; idx < items.size(); ++idx) {
    const auto* label = std::get_if<IndexLabel>(&items[idx].label);
    if (label != nullptr && label->bit == (bit_of(i, label->k) ? 1u : 0u)) out.push_back(idx);
  }
  return out;
}

std::vector<std::size_t> canonical_solution(const ComposedInstance& composed, std::size_t i,
                                            std::span<const std::size_t> witness) {
  const auto& c = composed.constants;
  if (i >= c.t) fail(ErrorCode::precondition, "canonical_solution: instance index out of range");
  const std::size_t per_instance = 3ul * c.n;
  std::set<std::size_t> positions(witness.begin(), witness.end());
  if (positions.size() != witness.size() || witness.size() != c.n) {
    fail(ErrorCode::precondition, "canonical_solution: witness must hold n distinct positions");
  }
  const auto& items = composed.knapsack.items;
  Nat sum = 0;
  for (std::size_t position : positions) {
    if (position >= per_instance) {
      fail(ErrorCode::precondition, "canonical_solution: witness position out of range");
    }
    sum += items[i * per_instance + position].weight - c.X;
  }
  if (sum != c.restricted_target) {
    fail(ErrorCode::precondition, "canonical_solution: witness does not sum to B_n");
  }

  std::vector<std::size_t> out;
  for (std::size_t position : positions) out.push_back(i * per_instance + position);
  for (std::size_t idx = (i + 1) * per_instance; idx < c.t * per_instance; ++idx) out.push_back(idx);
  for (std::size_t idx : quadratization_selection(composed, i)) out.push_back(idx);
  for (std::size_t idx : index_selection(composed, i)) out.push_back(idx);
  std::sort(out.begin(), out.end());
  return out;
}

Nat layer_weight(const ComposedInstance& composed, std::span<const std::size_t> items, Layer layer) {
  return layer_sum(composed, items, layer, false);
}

Nat layer_profit(const ComposedInstance& composed, std::span<const std::size_t> items, Layer layer) {
  return layer_sum(composed, items, layer, true);
}

Nat distinct_weight_bound(unsigned t, unsigned n) {
  const unsigned lg = static_cast<unsigned>(std::countr_zero(std::bit_ceil(t)));
  const unsigned long m = 3ul * n;
  return Nat(m * (m + 1) * (m + 2) / 6) + Nat(quadratization_item_count(lg)) + Nat(2ul * lg);
}

}  // namespace knapkern
