#include "seqcert/family.hpp"

#include <cmath>
#include <stdexcept>

namespace seqcert {

DecayRate DecayRate::geometric(double q) {
  if (!(q >= 0.0 && q < 1.0)) {
    throw std::invalid_argument("DecayRate: geometric needs 0 <= q < 1");
  }
  return {Kind::Geometric, q};
}

double DecayRate::at(Index n) const {
  if (n < 1) throw std::invalid_argument("DecayRate: n must be >= 1");
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::OneOverN:
      return 1.0 / static_cast<double>(n);
    case Kind::Geometric:
      return std::pow(q, static_cast<double>(n));
  }
  return 0.0;
}

Index DecayRate::first_n_below(double threshold) const {
  if (!(threshold > 0.0)) {
    throw std::invalid_argument("DecayRate: threshold must be > 0");
  }
  Index n = 1;
  while (at(n) >= threshold) {
    n *= 2;
    if (n > (1LL << 50)) {
      throw std::runtime_error("DecayRate: rate does not drop below threshold");
    }
  }
  Index lo = n / 2;
  while (n - lo > 1) {
    const Index mid = lo + (n - lo) / 2;
    (at(mid) < threshold ? n : lo) = mid;
  }
  return n;
}

Family Family::finite(SpaceKind space, std::vector<SeqElement> members,
                      std::optional<DiscrepancyEnvelope> discrepancy,
                      std::optional<TailModel> uniform_tail) {
  if (members.empty()) {
    throw std::invalid_argument("Family: finite family needs members");
  }
  for (const auto& m : members) {
    if (!(m.space() == space)) {
      throw std::invalid_argument("Family: members must share one space");
    }
  }
  if (uniform_tail) uniform_tail->validate_for(space);
  Family f(space, Generator::Finite);
  f.members_ = std::move(members);
  f.discrepancy_ = std::move(discrepancy);
  f.uniform_tail_ = uniform_tail;
  return f;
}

Family Family::constant(SeqElement member) {
  Family f(member.space(), Generator::Constant);
  f.members_.push_back(std::move(member));
  return f;
}

Family Family::basis_shift(SpaceKind space, double scale) {
  Family f(space, Generator::BasisShift);
  f.scale_ = scale;
  return f;
}

Family Family::alternating(SpaceKind space, double scale) {
  Family f(space, Generator::Alternating);
  f.scale_ = scale;
  return f;
}

Family Family::geometric_ramp(SpaceKind space, double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw std::invalid_argument("Family: geometric_ramp needs 0 < a < 1");
  }
  Family f(space, Generator::GeometricRamp);
  f.ratio_ = a;
  // sup over n of the member envelopes: the n = 1 envelope a^k
  f.uniform_tail_ = TailModel::geometric(1.0, a);
  f.discrepancy_ = DiscrepancyEnvelope{TailModel::geometric(1.0, a),
                                       DecayRate::one_over_n()};
  return f;
}

Family Family::plateau_shift() { return Family(SpaceKind::c(), Generator::PlateauShift); }

std::optional<Index> Family::finite_range() const {
  switch (generator_) {
    case Generator::Finite:
    case Generator::Constant:
      return static_cast<Index>(members_.size());
    case Generator::Alternating:
      return 2;
    case Generator::BasisShift:
      return scale_ == 0.0 ? std::optional<Index>(1) : std::nullopt;
    default:
      return std::nullopt;
  }
}

SeqElement Family::member(Index n) const {
  if (n < 1) throw std::invalid_argument("Family: member index must be >= 1");
  switch (generator_) {
    case Generator::Finite: {
      if (n > static_cast<Index>(members_.size())) {
        throw std::out_of_range("Family: member index past the finite list");
      }
      return members_[n - 1];
    }
    case Generator::Constant:
      return members_[0];
    case Generator::BasisShift:
      return SeqElement::basis_vector(space_, n).scaled(scale_);
    case Generator::Alternating:
      return SeqElement::basis_vector(space_, 1)
          .scaled(n % 2 == 0 ? scale_ : -scale_);
    case Generator::GeometricRamp: {
      // coordinates a^k / n, represented by a 32-term prefix plus the exact
      // geometric envelope beyond it
      const Index m = 32;
      Vector prefix(m);
      for (Index k = 1; k <= m; ++k) {
        prefix(k - 1) = std::pow(ratio_, static_cast<double>(k)) /
                        static_cast<double>(n);
      }
      return SeqElement(space_, std::move(prefix),
                        TailModel::geometric(1.0 / static_cast<double>(n), ratio_));
    }
    case Generator::PlateauShift: {
      // zeros through position n, ones beyond; limit 1, entries past the
      // prefix equal the limit exactly
      return SeqElement(space_, Vector::Zero(n), TailModel::zero(), 1.0);
    }
  }
  throw std::logic_error("Family: unknown generator");
}

}  // namespace seqcert
