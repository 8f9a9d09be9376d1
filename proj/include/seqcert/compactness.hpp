#pragma once

#include <string>
#include <vector>

#include "seqcert/convergence.hpp"
#include "seqcert/element.hpp"

namespace seqcert {

/// A described subset of the space whose precompactness is to be decided.
struct SetDescriptor {
  enum class Kind { FiniteSet, HilbertCube, BasisVectors, Ball };

  Kind kind = Kind::FiniteSet;
  SpaceKind space;
  std::vector<SeqElement> members;  // FiniteSet
  TailModel envelope;               // HilbertCube: |x_k| <= envelope(k) for all k
  double scale = 1.0;               // BasisVectors: {scale * e_n}
  double radius = 1.0;              // Ball: {x : ||x|| <= radius}

  static SetDescriptor finite_set(SpaceKind space,
                                  std::vector<SeqElement> members);
  static SetDescriptor hilbert_cube(SpaceKind space, TailModel envelope);
  static SetDescriptor basis_vectors(SpaceKind space, double scale);
  static SetDescriptor ball(SpaceKind space, double radius);
};

struct BoundednessResult {
  bool bounded = true;
  double bound = 0.0;
};

/// Outcome of the uniform tail condition over the set at one epsilon.
struct SetTailResult {
  enum class Kind { K0Found, TailFailure, Inconclusive };
  Kind kind = Kind::Inconclusive;
  Index k0 = 0;
  bool certified_for_all_eps = false;
  std::vector<TailWitness> pairs;  // for TailFailure: member n(K) per K
  std::string reason;
};

struct CompactnessCert {
  double norm_bound = 0.0;
  std::vector<EpsilonEntry> per_epsilon;  // (epsilon, K0); n unused
};

struct CompactnessVerdict {
  enum class Tag { Precompact, NotPrecompact, Inconclusive };
  Tag tag = Tag::Inconclusive;
  CompactnessCert cert;
  DivergenceWitness witness;  // TailLowerBound reused as the tail failure
  std::string reason;
};

/// Theorem-6.1 condition (1): a norm bound over the set.
BoundednessResult check_bounded(const SetDescriptor& set);

/// Theorem-6.1 condition (2): smallest grid K0 with sup over the set of
/// ||R_K x|| < eps, or a re-checkable witness family.
SetTailResult check_uniform_tail_set(const SetDescriptor& set, double epsilon,
                                     Index k_max = 64);

/// Precompactness = boundedness + uniform tails, certified over the grid
/// with a symbolic justification for the for-all-epsilon quantifier.
CompactnessVerdict check_precompact(
    const SetDescriptor& set,
    const std::vector<double>& eps_grid = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6},
    Index k_max = 64);

}  // namespace seqcert
