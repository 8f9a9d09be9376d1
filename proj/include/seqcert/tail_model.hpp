#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "seqcert/space.hpp"

namespace seqcert {

/// Symbolic per-coordinate envelope for the coordinates beyond an element's
/// stored prefix: |x_k - limit| <= envelope(k) for all k past the prefix.
///
/// Each model admits a closed-form, nonincreasing, vanishing upper bound
/// tau(K) on the norm of the envelope restricted to indices > K, which is
/// what makes tail conditions of the form ||R_K x|| < eps finitely checkable.
struct TailModel {
  enum class Type { Zero, Geometric, Power };

  Type type = Type::Zero;
  double c = 0.0;  // scale, >= 0
  double r = 0.0;  // Geometric ratio, 0 <= r < 1
  double s = 0.0;  // Power decay exponent, > 0

  static TailModel zero() { return TailModel{}; }

  static TailModel geometric(double c, double r) {
    if (!(c >= 0.0)) throw std::invalid_argument("TailModel: c must be >= 0");
    if (!(r >= 0.0 && r < 1.0)) {
      throw std::invalid_argument("TailModel: geometric ratio needs 0 <= r < 1");
    }
    TailModel t;
    t.type = Type::Geometric;
    t.c = c;
    t.r = r;
    return t;
  }

  static TailModel power(double c, double s) {
    if (!(c >= 0.0)) throw std::invalid_argument("TailModel: c must be >= 0");
    if (!(s > 0.0)) throw std::invalid_argument("TailModel: power exponent needs s > 0");
    TailModel t;
    t.type = Type::Power;
    t.c = c;
    t.s = s;
    return t;
  }

  bool is_trivial() const { return type == Type::Zero || c == 0.0; }

  /// Rejects envelopes whose induced tail is not summable in the given space
  /// (Power with s*p <= 1 in l_p).
  void validate_for(const SpaceKind& space) const {
    if (type == Type::Power && !space.sup_norm() && c > 0.0) {
      if (!(s * space.exponent() > 1.0)) {
        throw std::invalid_argument(
            "TailModel: power envelope needs s*p > 1 for p-summability in " +
            space.name());
      }
    }
  }

  /// Pointwise envelope value at coordinate index k (1-based).
  double envelope(std::int64_t k) const {
    if (k < 1) throw std::invalid_argument("TailModel: index must be >= 1");
    switch (type) {
      case Type::Zero:
        return 0.0;
      case Type::Geometric:
        return c * std::pow(r, static_cast<double>(k));
      case Type::Power:
        return c * std::pow(static_cast<double>(k), -s);
    }
    return 0.0;
  }

  /// Closed-form upper bound on the norm of the envelope over indices > K.
  ///
  /// Geometric(c, r):  l_p: c * r^{K+1} * (1 - r^p)^{-1/p};  sup: c * r^{K+1}.
  /// Power(c, s):      l_p: c * (K^{1-sp} / (sp-1))^{1/p} for K >= 1
  ///                   (integral test; K = 0 adds the k = 1 term);
    ///                 sup: c * (K+1)^{-s}.
  double tail_bound(const SpaceKind& space, std::int64_t K) const {
    if (K < 0) throw std::invalid_argument("TailModel: K must be >= 0");
    if (is_trivial()) return 0.0;
    const double Kd = static_cast<double>(K);
    switch (type) {
      case Type::Zero:
        return 0.0;
      case Type::Geometric: {
        const double head = c * std::pow(r, Kd + 1.0);
        if (space.sup_norm()) return head;
        const double p = space.exponent();
        return head * std::pow(1.0 - std::pow(r, p), -1.0 / p);
      }
      case Type::Power: {
        if (space.sup_norm()) return c * std::pow(Kd + 1.0, -s);
        const double p = space.exponent();
        const double sp = s * p;
        if (K == 0) {
          // first term plus the integral bound from 1
          return c * std::pow(1.0 + 1.0 / (sp - 1.0), 1.0 / p);
        }
        return c * std::pow(std::pow(Kd, 1.0 - sp) / (sp - 1.0), 1.0 / p);
      }
    }
    return 0.0;
  }

  /// Smallest K on a doubling-then-bisect grid with tail_bound(K) < eps.
  /// Sound because tail_bound is nonincreasing and vanishing.
  std::optional<std::int64_t> first_k_below(const SpaceKind& space, double eps,
                                            std::int64_t k_cap = (1LL << 40)) const {
    if (!(eps > 0.0)) throw std::invalid_argument("first_k_below: eps must be > 0");
    if (tail_bound(space, 0) < eps) return 0;
    std::int64_t hi = 1;
    while (tail_bound(space, hi) >= eps) {
      hi *= 2;
      if (hi > k_cap) return std::nullopt;
    }
    std::int64_t lo = hi / 2;  // tail_bound(lo) >= eps
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      (tail_bound(space, mid) < eps ? hi : lo) = mid;
    }
    return hi;
  }
};

}  // namespace seqcert
