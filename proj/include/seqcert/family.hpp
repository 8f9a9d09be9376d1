#pragma once

#include <optional>
#include <vector>

#include "seqcert/element.hpp"

namespace seqcert {

/// Vanishing rate in the family index n: rate(n) -> 0 as n -> infinity.
struct DecayRate {
  enum class Kind { Zero, OneOverN, Geometric };
  Kind kind = Kind::Zero;
  double q = 0.0;  // Geometric only, 0 <= q < 1

  static DecayRate zero() { return {}; }
  static DecayRate one_over_n() { return {Kind::OneOverN, 0.0}; }
  static DecayRate geometric(double q);

  double at(Index n) const;
  /// Smallest n with rate(n) < threshold.
  Index first_n_below(double threshold) const;
};

/// Symbolic coordinate-discrepancy envelope:
/// |c_k(x_n) - c_k(candidate)| <= coeff(k) * rate(n) for all k, n.
/// Since rate vanishes, its presence certifies termwise convergence.
struct DiscrepancyEnvelope {
  TailModel coeff;  // per-coordinate scale, reused as an index envelope
  DecayRate rate;

  double at(Index k, Index n) const { return coeff.envelope(k) * rate.at(n); }
};

/// A family (x_n) whose convergence is to be decided: either a finite list of
/// elements or one of the built-in parametric generators, with optional
/// symbolic evidence (a uniform tail majorant and discrepancy envelopes).
class Family {
 public:
  enum class Generator {
    Finite,
    Constant,       // x_n = member
    BasisShift,     // x_n = scale * e_n
    Alternating,    // x_n = (-1)^n * scale * e_1
    GeometricRamp,  // x_n with coordinates a^k / n
    PlateauShift,   // in c: x_n = (0, ..., 0, 1, 1, ...), ones from n+1
  };

  static Family finite(SpaceKind space, std::vector<SeqElement> members,
                       std::optional<DiscrepancyEnvelope> discrepancy = {},
                       std::optional<TailModel> uniform_tail = {});
  static Family constant(SeqElement member);
  static Family basis_shift(SpaceKind space, double scale);
  static Family alternating(SpaceKind space, double scale);
  static Family geometric_ramp(SpaceKind space, double a);
  static Family plateau_shift();

  const SpaceKind& space() const { return space_; }
  Generator generator() const { return generator_; }
  double scale() const { return scale_; }
  double ratio() const { return ratio_; }
  const std::vector<SeqElement>& stored_members() const { return members_; }
  const std::optional<DiscrepancyEnvelope>& discrepancy() const {
    return discrepancy_;
  }
  const std::optional<TailModel>& uniform_tail() const { return uniform_tail_; }

  /// Number of distinct members when the family's range is finite
  /// (Finite, Constant, Alternating); nullopt for the unbounded generators.
  std::optional<Index> finite_range() const;

  /// Materializes the n-th member (n >= 1).
  SeqElement member(Index n) const;

 private:
  Family(SpaceKind space, Generator gen) : space_(space), generator_(gen) {}

  SpaceKind space_;
  Generator generator_;
  std::vector<SeqElement> members_;
  double scale_ = 1.0;
  double ratio_ = 0.5;
  std::optional<DiscrepancyEnvelope> discrepancy_;
  std::optional<TailModel> uniform_tail_;
};

}  // namespace seqcert
