#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "seqcert/interval.hpp"
#include "seqcert/space.hpp"
#include "seqcert/tail_model.hpp"

namespace seqcert {

using Vector = Eigen::VectorXd;
using Index = std::int64_t;

/// A certified representation of a sequence-space element: a finite prefix of
/// exact coordinates, an explicit limit (for the space c; fixed to 0
/// elsewhere), and a symbolic tail envelope bounding |x_k - limit| for every
/// index past the prefix.
///
/// Prefix coordinates are authoritative and need not obey the envelope;
/// the envelope constrains only the unseen tail.
///
/// Immutable value type; all operations on it are pure.
class SeqElement {
 public:
  SeqElement(SpaceKind space, Vector prefix, TailModel tail, double limit = 0.0);

  /// Element with all coordinates zero.
  static SeqElement zero(const SpaceKind& space);

  /// Standard basis vector e_n (n >= 1). In c, e_0 is the all-ones sequence.
  static SeqElement basis_vector(const SpaceKind& space, Index n);

  const SpaceKind& space() const { return space_; }
  const Vector& prefix() const { return prefix_; }
  const TailModel& tail() const { return tail_; }
  double limit() const { return limit_; }
  Index prefix_length() const { return static_cast<Index>(prefix_.size()); }

  /// True when every coordinate is known exactly (tail envelope is trivial,
  /// so x_k = limit for all k past the prefix).
  bool fully_determined() const { return tail_.is_trivial(); }

  /// Exact value of x_k when determined (k <= prefix length, or trivial
  /// tail); throws otherwise.
  double entry_exact(Index k) const;

  /// Enclosure of the raw sequence entry x_k, k >= 1.
  Interval entry(Index k) const;

  SeqElement scaled(double factor) const;

  /// The element with the first K raw entries replaced by the given vector
  /// (used by the basis operators); tail and limit as specified.
  SeqElement with_prefix(Vector prefix) const;

 private:
  SpaceKind space_;
  Vector prefix_;
  TailModel tail_;
  double limit_;
};

/// Schauder coordinate c_k(x): the raw entry x_k for l_p / c_0 / l_2 with
/// the standard basis (k >= 1); for c, c_0(x) is the limit and
/// c_k(x) = x_k - c_0(x) for k >= 1.
Interval coordinate(const SeqElement& x, Index k);

/// Enclosure of ||R_K x||: the norm of the coordinates past index K
/// (recentred by the limit in c). lo uses the stored prefix alone; hi adds
/// the envelope's closed-form tail bound plus slack.
NormInterval tail_norm_bounds(const SeqElement& x, Index K,
                              double slack = kDefaultSlack);

/// Enclosure of ||x||.
NormInterval norm_bounds(const SeqElement& x, double slack = kDefaultSlack);

/// Enclosure of ||x - y|| computed directly from the two representations
/// (per-coordinate interval differences on the joint prefix, triangle
/// inequality on the joint tail).
NormInterval distance_bounds(const SeqElement& x, const SeqElement& y,
                             double slack = kDefaultSlack);

}  // namespace seqcert
