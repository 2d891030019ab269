#pragma once

#include <cstdint>

namespace alphaboard {

// splitmix64 (Steele, Lea & Flood 2014; Vigna's reference constants).
// The whole simulator draws from this one generator so that any run is
// reproducible from a single 64-bit seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform over [0, n), n >= 1. Multiply-shift with rejection (Lemire),
  // so every residue is exactly equally likely.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      std::uint64_t threshold = -n % n;
      while (lo < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Seed for substream `index` of a master seed: output #index of the
// splitmix64 stream started at `master`. O(1) for any index, so
// replications can be farmed out to workers in any order.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  Rng r(master + index * 0x9E3779B97F4A7C15ULL);
  return r.next();
}

}  // namespace alphaboard
