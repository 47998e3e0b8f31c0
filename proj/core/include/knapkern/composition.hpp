#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "knapkern/types.hpp"

namespace knapkern {

// narrow: Y = 3 n B t^2, which is below the total encoding profit
// 3tB + 9nB C(t,2) and lets t >= 4 no-instances compose to a yes-instance.
// widened: Y = 9 n B t^2 / 2, which exceeds it.
enum class YRule { widened, narrow };

// Gadget magnitudes for composing t instances of size n.
struct CompositionConstants {
  unsigned t = 0;     // power of two, >= 2
  unsigned n = 0;
  unsigned lg_t = 0;  // log2 t
  Nat restricted_target;  // B_n
  Nat X;  // 3 t n B_n
  Nat B;  // B_n + n X
  YRule y_rule = YRule::widened;
  Nat Y;  // t^2 9 n B / 2, or t^2 3 n B under YRule::narrow
  Nat Z;  // lg^2 t * Y^2 * 3^{lg^2 t}
  Nat T;  // sum_{k < lg^2 t} 3^k
  Nat W;  // (t-1) Z + T Y + (3t-2) B
  Nat P;  // W + C(t,2) 9 n B

  // Row-major bijection {0..lg t-1}^2 -> {0..lg^2 t-1}.
  unsigned f(unsigned k, unsigned l) const noexcept { return k * lg_t + l; }
};

// Throws Error(precondition) unless t is a power of two >= 2 and n >= 1.
CompositionConstants make_constants(unsigned t, unsigned n, YRule y_rule = YRule::widened);

struct ComposedInstance {
  KnapsackInstance knapsack;  // every item labeled
  CompositionConstants constants;
  std::size_t input_count = 0;  // instances supplied before padding

  // Always true under YRule::widened.
  bool encoding_profit_below_y = false;
};

// Least power of two >= max(2, size), padding with copies of the last entry.
std::vector<RestrictedSubsetSumInstance> pad_to_power_of_two(
    std::span<const RestrictedSubsetSumInstance> instances);

std::vector<Item> build_encoding_items(std::span<const RestrictedSubsetSumInstance> instances,
                                       const CompositionConstants& constants);
std::vector<Item> build_quadratization_items(const CompositionConstants& constants);
std::vector<Item> build_index_items(const CompositionConstants& constants);

// Pads, builds the encoding, quadratization and index families (in that
// order) and sets W and P. Yes-instance iff some input is a yes-instance.
ComposedInstance compose(std::span<const RestrictedSubsetSumInstance> instances,
                         YRule y_rule = YRule::widened);

// Item indices of Y_i (quadratization items selected by the bits of i).
std::vector<std::size_t> quadratization_selection(const ComposedInstance& composed, std::size_t i);
// Item indices of Z_i.
std::vector<std::size_t> index_selection(const ComposedInstance& composed, std::size_t i);

// X*_i u X_{i+1..t-1} u Y_i u Z_i for a witness of instance i (0-based
// positions). The result has weight exactly W and profit exactly P.
std::vector<std::size_t> canonical_solution(const ComposedInstance& composed, std::size_t i,
                                            std::span<const std::size_t> witness);

enum class Layer { Z, Y };

// Per-item floored layer value, summed: w_Z(x) = floor(w/Z),
// w_Y(x) = floor((w mod Z) / Y).
Nat layer_weight(const ComposedInstance& composed, std::span<const std::size_t> items, Layer layer);
Nat layer_profit(const ComposedInstance& composed, std::span<const std::size_t> items, Layer layer);

// Upper bound on w# of any composed instance: |A_n| + |Y| + |Z| with
// |Y| = 3 C(lg t, 2) + lg t and |Z| = 2 lg t.
Nat distinct_weight_bound(unsigned t, unsigned n);

std::size_t quadratization_item_count(unsigned lg_t);

}  // namespace knapkern
