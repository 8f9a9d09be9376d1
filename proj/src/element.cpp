#include "seqcert/element.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seqcert {

SeqElement::SeqElement(SpaceKind space, Vector prefix, TailModel tail, double limit)
    : space_(space), prefix_(std::move(prefix)), tail_(tail), limit_(limit) {
  tail_.validate_for(space_);
  if (!prefix_.allFinite()) {
    throw std::invalid_argument("SeqElement: prefix entries must be finite");
  }
  if (!std::isfinite(limit_)) {
    throw std::invalid_argument("SeqElement: limit must be finite");
  }
  if (space_.kind != SpaceKind::Kind::C && limit_ != 0.0) {
    throw std::invalid_argument("SeqElement: nonzero limit only allowed in c");
  }
}

SeqElement SeqElement::zero(const SpaceKind& space) {
  return SeqElement(space, Vector(), TailModel::zero());
}

SeqElement SeqElement::basis_vector(const SpaceKind& space, Index n) {
  if (n == 0) {
    if (space.kind != SpaceKind::Kind::C) {
      throw std::invalid_argument("basis_vector: e_0 exists only in c");
    }
    return SeqElement(space, Vector(), TailModel::zero(), 1.0);
  }
  if (n < 1) throw std::invalid_argument("basis_vector: index must be >= 0");
  Vector prefix = Vector::Zero(n);
  prefix(n - 1) = 1.0;
  return SeqElement(space, std::move(prefix), TailModel::zero());
}

double SeqElement::entry_exact(Index k) const {
  if (k < 1) throw std::invalid_argument("entry_exact: index must be >= 1");
  if (k <= prefix_length()) return prefix_(k - 1);
  if (fully_determined()) return limit_;
  throw std::invalid_argument("entry_exact: coordinate " + std::to_string(k) +
                              " not determined by the prefix");
}

Interval SeqElement::entry(Index k) const {
  if (k < 1) throw std::invalid_argument("entry: index must be >= 1");
  if (k <= prefix_length()) return Interval::point(prefix_(k - 1));
  const double env = tail_.envelope(k);
  return Interval(limit_ - env, limit_ + env);
}

SeqElement SeqElement::scaled(double factor) const {
  TailModel t = tail_;
  t.c *= std::abs(factor);
  return SeqElement(space_, prefix_ * factor, t, limit_ * factor);
}

SeqElement SeqElement::with_prefix(Vector prefix) const {
  return SeqElement(space_, std::move(prefix), tail_, limit_);
}

Interval coordinate(const SeqElement& x, Index k) {
  const bool in_c = x.space().kind == SpaceKind::Kind::C;
  if (k == 0) {
    if (!in_c) throw std::invalid_argument("coordinate: k = 0 only exists in c");
    return Interval::point(x.limit());
  }
  if (k < 1) throw std::invalid_argument("coordinate: index must be >= 0");
  Interval raw = x.entry(k);
  if (!in_c) return raw;
  return Interval(raw.lo - x.limit(), raw.hi - x.limit());
}

namespace {

// Accumulates the norm of a finite list of per-coordinate |.|-intervals
// together with a scalar tail bound, in either the p-norm or the sup-norm.
NormInterval combine(const SpaceKind& space, double lo_acc, double hi_acc,
                     double tail_hi, double extra_lo, double extra_hi,
                     double slack) {
  // lo_acc / hi_acc are p-th power sums for l_p, running maxima for sup
  // spaces; extra_* handles the |limit| floor in sup-norm spaces.
  if (space.sup_norm()) {
    const double lo = std::max(lo_acc, extra_lo);
    const double hi = std::max({hi_acc, extra_hi + tail_hi});
    return NormInterval(lo, std::max(lo, hi) + slack);
  }
  const double p = space.exponent();
  const double lo = std::pow(lo_acc, 1.0 / p);
  const double hi =
      std::pow(hi_acc + std::pow(tail_hi, p), 1.0 / p) + slack;
  return NormInterval(lo, std::max(lo, hi));
}

}  // namespace

NormInterval tail_norm_bounds(const SeqElement& x, Index K, double slack) {
  if (K < 0) throw std::invalid_argument("tail_norm_bounds: K must be >= 0");
  const SpaceKind& space = x.space();
  const bool in_c = space.kind == SpaceKind::Kind::C;
  const Index m = x.prefix_length();

  double lo_acc = 0.0, hi_acc = 0.0;
  for (Index k = K + 1; k <= m; ++k) {
    const double v = std::abs(x.prefix()(k - 1) - (in_c ? x.limit() : 0.0));
    if (space.sup_norm()) {
      lo_acc = std::max(lo_acc, v);
      hi_acc = std::max(hi_acc, v);
    } else {
      const double vp = std::pow(v, space.exponent());
      lo_acc += vp;
      hi_acc += vp;
    }
  }
  const double tail_hi = x.tail().tail_bound(space, std::max(K, m));
  return combine(space, lo_acc, hi_acc, tail_hi, 0.0, 0.0, slack);
}

NormInterval norm_bounds(const SeqElement& x, double slack) {
  const SpaceKind& space = x.space();
  const Index m = x.prefix_length();

  double lo_acc = 0.0, hi_acc = 0.0;
  for (Index k = 1; k <= m; ++k) {
    const double v = std::abs(x.prefix()(k - 1));
    if (space.sup_norm()) {
      lo_acc = std::max(lo_acc, v);
      hi_acc = std::max(hi_acc, v);
    } else {
      const double vp = std::pow(v, space.exponent());
      lo_acc += vp;
      hi_acc += vp;
    }
  }
  // In c the entries approach the limit, so the sup is at least |limit| and
  // the tail contributes at most |limit| + envelope.
  const double lim = std::abs(x.limit());
  const double tail_hi = x.tail().tail_bound(space, m);
  return combine(space, lo_acc, hi_acc, tail_hi, lim, lim, slack);
}

NormInterval distance_bounds(const SeqElement& x, const SeqElement& y,
                             double slack) {
  if (!(x.space() == y.space())) {
    throw std::invalid_argument("distance_bounds: space mismatch");
  }
  const SpaceKind& space = x.space();
  const Index m = std::max(x.prefix_length(), y.prefix_length());

  double lo_acc = 0.0, hi_acc = 0.0;
  for (Index k = 1; k <= m; ++k) {
    const Interval d = (x.entry(k) - y.entry(k)).abs();
    if (space.sup_norm()) {
      lo_acc = std::max(lo_acc, d.lo);
      hi_acc = std::max(hi_acc, d.hi);
    } else {
      const double p = space.exponent();
      lo_acc += std::pow(d.lo, p);
      hi_acc += std::pow(d.hi, p);
    }
  }
  const double dlim = std::abs(x.limit() - y.limit());
  const double tail_hi =
      x.tail().tail_bound(space, m) + y.tail().tail_bound(space, m);
  return combine(space, lo_acc, hi_acc, tail_hi, dlim, dlim, slack);
}

}  // namespace seqcert
