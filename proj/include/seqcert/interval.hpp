#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seqcert {

/// Additive slack added to every upper bound so that double-precision
/// enclosures stay sound at desk-scale magnitudes.
inline constexpr double kDefaultSlack = 9.313225746154785e-10;  // 2^-30

/// Closed interval [lo, hi] enclosing a real quantity.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo <= hi)) {
      throw std::invalid_argument("Interval: lo must not exceed hi");
    }
  }

  static Interval point(double v) { return Interval(v, v); }

  bool contains(double v) const { return lo <= v && v <= hi; }

  double width() const { return hi - lo; }

  Interval operator-(const Interval& other) const {
    return Interval(lo - other.hi, hi - other.lo);
  }

  /// Enclosure of |v| for v in this interval.
  Interval abs() const {
    if (lo >= 0.0) return *this;
    if (hi <= 0.0) return Interval(-hi, -lo);
    return Interval(0.0, std::max(-lo, hi));
  }
};

/// Interval enclosing a norm value; both endpoints nonnegative.
struct NormInterval {
  double lo = 0.0;
  double hi = 0.0;

  NormInterval() = default;
  NormInterval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(0.0 <= lo && lo <= hi)) {
      throw std::invalid_argument("NormInterval: need 0 <= lo <= hi");
    }
  }

  bool contains(double v) const { return lo <= v && v <= hi; }
};

}  // namespace seqcert
