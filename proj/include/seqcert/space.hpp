#pragma once

#include <stdexcept>
#include <string>

namespace seqcert {

/// The supported sequence spaces: l_p (1 <= p < inf), c_0, c, and the
/// separable Hilbert space realized as l_2 with inner-product coordinates.
struct SpaceKind {
  enum class Kind { Lp, C0, C, Ell2Hilbert };

  Kind kind = Kind::Lp;
  double p = 2.0;  // meaningful for Lp only

  static SpaceKind lp(double p) {
    if (!(p >= 1.0)) {
      throw std::invalid_argument("SpaceKind: l_p requires p >= 1");
    }
    SpaceKind s;
    s.kind = Kind::Lp;
    s.p = p;
    return s;
  }
  static SpaceKind c0() { return SpaceKind{Kind::C0, 0.0}; }
  static SpaceKind c() { return SpaceKind{Kind::C, 0.0}; }
  static SpaceKind hilbert() { return SpaceKind{Kind::Ell2Hilbert, 2.0}; }

  /// Spaces carrying the sup-norm (c_0 and c).
  bool sup_norm() const { return kind == Kind::C0 || kind == Kind::C; }

  /// The exponent used for p-norm accumulation; Hilbert behaves as l_2.
  double exponent() const {
    if (sup_norm()) {
      throw std::logic_error("SpaceKind: sup-norm space has no exponent");
    }
    return p;
  }

  bool operator==(const SpaceKind& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Lp) return p == o.p;
    return true;
  }

  std::string name() const {
    switch (kind) {
      case Kind::Lp:
        return "l_" + std::to_string(p);
      case Kind::C0:
        return "c_0";
      case Kind::C:
        return "c";
      case Kind::Ell2Hilbert:
        return "hilbert";
    }
    return "?";
  }
};

}  // namespace seqcert
