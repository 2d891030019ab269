#pragma once

#include <cstdint>
#include <numeric>

namespace alphaboard {

// Exact ratio of 64-bit integers. Search times live on the grid 1 + k/M and
// costs are solution_count*(M+k)/state_space; both stay integral until the
// moment they are printed, so there is no floating-point drift in the
// bookkeeping.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational reduced(std::int64_t num, std::int64_t den) {
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return Rational{num, den};
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace alphaboard
