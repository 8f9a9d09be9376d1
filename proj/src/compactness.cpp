#include "seqcert/compactness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace seqcert {

SetDescriptor SetDescriptor::finite_set(SpaceKind space,
                                        std::vector<SeqElement> members) {
  if (members.empty()) {
    throw std::invalid_argument("SetDescriptor: finite set needs members");
  }
  for (const auto& m : members) {
    if (!(m.space() == space)) {
      throw std::invalid_argument("SetDescriptor: members must share one space");
    }
  }
  SetDescriptor s;
  s.kind = Kind::FiniteSet;
  s.space = space;
  s.members = std::move(members);
  return s;
}

SetDescriptor SetDescriptor::hilbert_cube(SpaceKind space, TailModel envelope) {
  envelope.validate_for(space);
  SetDescriptor s;
  s.kind = Kind::HilbertCube;
  s.space = space;
  s.envelope = envelope;
  return s;
}

SetDescriptor SetDescriptor::basis_vectors(SpaceKind space, double scale) {
  SetDescriptor s;
  s.kind = Kind::BasisVectors;
  s.space = space;
  s.scale = scale;
  return s;
}

SetDescriptor SetDescriptor::ball(SpaceKind space, double radius) {
  if (!(radius >= 0.0)) {
    throw std::invalid_argument("SetDescriptor: ball radius must be >= 0");
  }
  SetDescriptor s;
  s.kind = Kind::Ball;
  s.space = space;
  s.radius = radius;
  return s;
}

BoundednessResult check_bounded(const SetDescriptor& set) {
  BoundednessResult res;
  switch (set.kind) {
    case SetDescriptor::Kind::FiniteSet: {
      double b = 0.0;
      for (const auto& m : set.members) b = std::max(b, norm_bounds(m).hi);
      res.bound = b;
      return res;
    }
    case SetDescriptor::Kind::HilbertCube:
      // every cube point is dominated coordinatewise by the envelope element
      res.bound = norm_bounds(SeqElement(set.space, Vector(), set.envelope)).hi;
      return res;
    case SetDescriptor::Kind::BasisVectors:
      res.bound = std::abs(set.scale);  // ||e_n|| = 1 for the standard bases
      return res;
    case SetDescriptor::Kind::Ball:
      res.bound = set.radius;
      return res;
  }
  throw std::logic_error("check_bounded: unknown descriptor");
}

namespace {

Index monotone_k_search(const std::function<bool(Index)>& pred) {
  if (pred(0)) return 0;
  Index hi = 1;
  while (!pred(hi)) {
    hi *= 2;
    if (hi > (1LL << 40)) {
      throw std::runtime_error("monotone_k_search: predicate never satisfied");
    }
  }
  Index lo = hi / 2;
  while (hi - lo > 1) {
    const Index mid = lo + (hi - lo) / 2;
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

SetTailResult check_uniform_tail_set(const SetDescriptor& set, double epsilon,
                                     Index k_max) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("check_uniform_tail_set: epsilon must be > 0");
  }
  SetTailResult res;
  switch (set.kind) {
    case SetDescriptor::Kind::FiniteSet: {
      auto pred = [&](Index K) {
        double worst = 0.0;
        for (const auto& m : set.members) {
          worst = std::max(worst, tail_norm_bounds(m, K).hi);
        }
        return worst < epsilon;
      };
      res.kind = SetTailResult::Kind::K0Found;
      res.k0 = monotone_k_search(pred);
      res.certified_for_all_eps = true;
      return res;
    }
    case SetDescriptor::Kind::HilbertCube: {
      // sup over the cube of ||R_K x|| is bounded by the envelope's tail norm
      const SeqElement env(set.space, Vector(), set.envelope);
      res.kind = SetTailResult::Kind::K0Found;
      res.k0 = monotone_k_search(
          [&](Index K) { return tail_norm_bounds(env, K).hi < epsilon; });
      res.certified_for_all_eps = true;
      return res;
    }
    case SetDescriptor::Kind::BasisVectors: {
      const double s = std::abs(set.scale);
      if (s >= epsilon) {
        res.kind = SetTailResult::Kind::TailFailure;
        for (Index K = 0; K <= k_max; ++K) {
          // ||R_K (scale e_{K+1})|| = |scale|
          res.pairs.push_back(TailWitness{K, K + 1, s});
        }
        return res;
      }
      res.kind = SetTailResult::Kind::K0Found;
      res.k0 = 0;
      res.certified_for_all_eps = (s == 0.0);
      return res;
    }
    case SetDescriptor::Kind::Ball: {
      if (set.radius >= epsilon && set.radius > 0.0) {
        // infinite-dimensional spaces: r * e_{K+1} lies in the ball
        res.kind = SetTailResult::Kind::TailFailure;
        for (Index K = 0; K <= k_max; ++K) {
          res.pairs.push_back(TailWitness{K, K + 1, set.radius});
        }
        return res;
      }
      res.kind = SetTailResult::Kind::K0Found;
      res.k0 = 0;
      res.certified_for_all_eps = (set.radius == 0.0);
      return res;
    }
  }
  throw std::logic_error("check_uniform_tail_set: unknown descriptor");
}

CompactnessVerdict check_precompact(const SetDescriptor& set,
                                    const std::vector<double>& eps_grid,
                                    Index k_max) {
  if (eps_grid.empty()) {
    throw std::invalid_argument("check_precompact: eps grid must be nonempty");
  }
  CompactnessVerdict v;
  const BoundednessResult b = check_bounded(set);
  if (!b.bounded) {
    v.tag = CompactnessVerdict::Tag::NotPrecompact;
    v.reason = "unbounded";
    return v;
  }
  v.cert.norm_bound = b.bound;

  bool all_eps_certified = true;
  for (double eps : eps_grid) {
    const SetTailResult r = check_uniform_tail_set(set, eps, k_max);
    switch (r.kind) {
      case SetTailResult::Kind::TailFailure: {
        v.tag = CompactnessVerdict::Tag::NotPrecompact;
        v.witness.kind = DivergenceWitness::Kind::TailLowerBound;
        v.witness.eps_star = eps;
        v.witness.pairs = r.pairs;
        return v;
      }
      case SetTailResult::Kind::Inconclusive:
        v.tag = CompactnessVerdict::Tag::Inconclusive;
        v.reason = r.reason;
        return v;
      case SetTailResult::Kind::K0Found:
        break;
    }
    all_eps_certified = all_eps_certified && r.certified_for_all_eps;
    EpsilonEntry e;
    e.epsilon = eps;
    e.k0 = r.k0;
    v.cert.per_epsilon.push_back(e);
  }
  if (!all_eps_certified) {
    v.tag = CompactnessVerdict::Tag::Inconclusive;
    v.reason =
        "uniform tails passed the grid but have no symbolic majorant "
        "certifying all epsilon";
    return v;
  }
  v.tag = CompactnessVerdict::Tag::Precompact;
  return v;
}

}  // namespace seqcert
