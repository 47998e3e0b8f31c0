#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "knapkern/bigint.hpp"

namespace knapkern {

// Seeded source of all randomness. The engine is std::mt19937_64, whose
// output sequence is fixed by the C++ standard; range reduction is done
// here by rejection sampling rather than by std::uniform_int_distribution
// (whose algorithm is implementation-defined), so identical seeds give
// identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [lo, hi], inclusive.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  Nat uniform(const Nat& lo, const Nat& hi);

  template <class T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform(0, i - 1));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace knapkern
