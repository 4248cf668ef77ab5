#pragma once

#include <cstdint>
#include <random>

namespace reisner {

/// Seeded deterministic RNG.  Bounded draws go through rejection sampling
/// on the raw 64-bit stream, so results do not depend on the standard
/// library's distribution implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi] inclusive.
  long long in_range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace reisner
