#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <vector>

#include "seqcert/element.hpp"

namespace seqcert {

/// A Schauder basis the library can compute with: the standard unit vectors
/// of l_p / c_0 / l_2, the standard basis of c (e_0 = all-ones plus unit
/// vectors), or an orthonormal rotation of the first d unit vectors of l_2
/// (identity beyond d).
struct BasisDescriptor {
  enum class Family { StandardUnitVectors, CStandard, FiniteRotation };

  Family family = Family::StandardUnitVectors;
  Eigen::MatrixXd rotation;  // d x d, FiniteRotation only; columns are the
                             // rotated basis vectors

  static BasisDescriptor standard() { return BasisDescriptor{}; }
  static BasisDescriptor c_standard() {
    return BasisDescriptor{Family::CStandard, {}};
  }
  /// Throws unless the matrix is orthogonal within the given slack.
  static BasisDescriptor finite_rotation(Eigen::MatrixXd q,
                                         double slack = 1e-9);

  /// The default basis for a space.
  static BasisDescriptor for_space(const SpaceKind& space);

  void validate_for(const SpaceKind& space) const;

  Index rotation_dim() const {
    return family == Family::FiniteRotation ? rotation.rows() : 0;
  }
};

/// The reference constant ||A^{-1}|| used in the operator-norm bounds
/// ||S_n|| <= ||A^{-1}||, ||R_n|| <= 2||A^{-1}||. Equal to 1 for every basis
/// this library supports; the sampling estimator guards the claim rather than
/// assuming it.
struct BasisConstant {
  double value = 1.0;
};

inline BasisConstant basis_constant(const BasisDescriptor&) {
  return BasisConstant{1.0};
}

/// Partial-sum operator: S_K x = sum_{k <= K} c_k(x) e_k (the sum starts at
/// k = 0 for the c basis, so S_K x there is (x_1, ..., x_K, L, L, ...) with
/// L the limit of x).
SeqElement apply_S(const SeqElement& x, Index K, const BasisDescriptor& basis);

/// Remainder operator: R_K x = x - S_K x, with zeros in the first K entries
/// (for c: (0, ..., 0, x_{K+1} - L, ...) with limit 0).
SeqElement apply_R(const SeqElement& x, Index K, const BasisDescriptor& basis);

/// Schauder coordinates c_1..c_K (c_0..c_K for the c basis) as exact
/// scalars. Throws when a requested coordinate is not determinable to within
/// delta, naming the first unresolvable index.
std::vector<double> expand(const SeqElement& x, const BasisDescriptor& basis,
                           Index K, double delta = kDefaultSlack);

/// Finite truncation of the Schauder expansion: sum_k coords[k] e_k.
/// limit_coord is c_0 and is only meaningful for the c basis.
SeqElement reconstruct(const SpaceKind& space, const BasisDescriptor& basis,
                       const std::vector<double>& coords,
                       std::optional<double> limit_coord = std::nullopt);

/// Enclosure of the Y-norm sup_n ||S_n x||, evaluated on n <= N and
/// majorized over all n via the tail envelope.
NormInterval y_norm(const SeqElement& x, const BasisDescriptor& basis, Index N,
                    double slack = kDefaultSlack);

/// The operator whose norm estimate_operator_norm samples.
struct OperatorSpec {
  enum class Kind { PartialSum, Remainder, CoordinateFunctional };
  Kind kind = Kind::PartialSum;
  Index index = 1;  // K for S_K / R_K, k for c_k

  static OperatorSpec S(Index K) { return {Kind::PartialSum, K}; }
  static OperatorSpec R(Index K) { return {Kind::Remainder, K}; }
  static OperatorSpec c(Index k) { return {Kind::CoordinateFunctional, k}; }
};

/// Certified lower bound on the operator norm: the max of ||op(x)|| / ||x||
/// over `trials` sampled elements (random support of size <= 32, coordinates
/// uniform on [-1, 1], then normalized). Deterministic given (trials, seed);
/// trial t uses a generator seeded by (seed, t).
double estimate_operator_norm(const OperatorSpec& op, const SpaceKind& space,
                              const BasisDescriptor& basis, int trials,
                              std::uint64_t seed);

}  // namespace seqcert
