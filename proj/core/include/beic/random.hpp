#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "beic/clutter.hpp"

namespace beic {

/// Deterministic RNG wrapper. Bounded sampling is done by rejection on raw
/// mt19937_64 output, so identical seeds give identical streams on every
/// platform (std::uniform_int_distribution has no such guarantee).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  std::uint64_t below(std::uint64_t n) {
    // rejection sampling over the largest multiple of n
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi], inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  bool coin() { return eng_() & 1; }

 private:
  std::mt19937_64 eng_;
};

/// Random clutter on labels "1".."n" with exactly `edge_count` edges of
/// arity 2..max_arity. Contained or duplicate candidates are resampled; after
/// a bounded number of attempts Error(EdgeBudgetExhausted) is thrown.
Clutter random_clutter(Rng& rng, std::size_t n, std::size_t edge_count,
                       std::size_t max_arity);
Clutter random_clutter(std::uint64_t seed, std::size_t n,
                       std::size_t edge_count, std::size_t max_arity);

}  // namespace beic
