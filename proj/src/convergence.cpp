#include "seqcert/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace seqcert {

namespace {

// Coordinate access in the Corollary-5.1 convention: in c, k = 0 is the
// limit functional and k >= 1 the raw sequence entry; elsewhere k >= 1 is
// the Schauder coordinate (= raw entry for the standard bases).
Interval coord_interval(const SeqElement& x, Index k) {
  if (x.space().kind == SpaceKind::Kind::C) {
    if (k == 0) return Interval::point(x.limit());
    return x.entry(k);
  }
  return x.entry(k);
}

// Distance from a point to an interval (0 when inside).
double point_interval_dist(double v, const Interval& iv) {
  if (v < iv.lo) return iv.lo - v;
  if (v > iv.hi) return v - iv.hi;
  return 0.0;
}

// Exact termwise limit of the built-in generators at coordinate k, when one
// exists; nullopt marks oscillation (Alternating at k = 1).
std::optional<double> generator_coord_limit(const Family& f, Index k) {
  switch (f.generator()) {
    case Family::Generator::BasisShift:
      return 0.0;  // c_k(scale * e_n) = 0 once n > k
    case Family::Generator::GeometricRamp:
      return 0.0;
    case Family::Generator::PlateauShift:
      return k == 0 ? 1.0 : 0.0;
    case Family::Generator::Alternating:
      if (k == 1 && f.scale() != 0.0) return std::nullopt;
      return 0.0;
    default:
      return std::nullopt;
  }
}

CoordCheck check_one_coordinate(const Family& f, const SeqElement& candidate,
                                Index k, double delta) {
  CoordCheck out;
  out.k = k;
  const Interval cand = coord_interval(candidate, k);

  switch (f.generator()) {
    case Family::Generator::Constant: {
      const Interval mem = coord_interval(f.member(1), k);
      const Interval gap = (mem - cand).abs();
      if (gap.lo > delta) {
        out.status = CoordCheck::Status::CertifiedFail;
        out.gap = gap.lo;
      } else if (gap.hi <= delta) {
        out.status = CoordCheck::Status::CertifiedPass;
      } else {
        out.status = CoordCheck::Status::EmpiricalPass;
      }
      return out;
    }
    case Family::Generator::BasisShift:
    case Family::Generator::GeometricRamp:
    case Family::Generator::PlateauShift:
    case Family::Generator::Alternating: {
      const std::optional<double> lim = generator_coord_limit(f, k);
      if (!lim.has_value()) {
        // oscillation between +scale and -scale: for any target value the
        // limsup discrepancy is at least |scale|
        const double s = std::abs(f.scale());
        const double lb = std::max(
            s, std::max(point_interval_dist(f.scale(), cand),
                        point_interval_dist(-f.scale(), cand)));
        if (lb > delta) {
          out.status = CoordCheck::Status::CertifiedFail;
          out.gap = lb;
        } else {
          out.status = CoordCheck::Status::CertifiedPass;
        }
        return out;
      }
      const double d_lo = point_interval_dist(*lim, cand);
      const double d_hi =
          std::max(std::abs(*lim - cand.lo), std::abs(*lim - cand.hi));
      if (d_lo > delta) {
        out.status = CoordCheck::Status::CertifiedFail;
        out.gap = d_lo;
      } else if (d_hi <= delta) {
        out.status = CoordCheck::Status::CertifiedPass;
      } else {
        out.status = CoordCheck::Status::EmpiricalPass;
      }
      return out;
    }
    case Family::Generator::Finite: {
      if (f.discrepancy().has_value()) {
        // the symbolic envelope vanishes in n, so termwise convergence to
        // the candidate holds by assumption
        out.status = CoordCheck::Status::CertifiedPass;
        return out;
      }
      const Index count = static_cast<Index>(f.stored_members().size());
      const Interval last = coord_interval(f.member(count), k);
      const Interval gap = (last - cand).abs();
      out.status = gap.lo > delta ? CoordCheck::Status::EmpiricalFail
                                  : CoordCheck::Status::EmpiricalPass;
      out.gap = gap.lo;
      return out;
    }
  }
  throw std::logic_error("check_one_coordinate: unknown generator");
}

// Smallest K on {0, 1, ...} with pred(K) true; pred must be monotone
// (false ... false true ... true). Doubling then bisection.
Index monotone_search(const std::function<bool(Index)>& pred) {
  if (pred(0)) return 0;
  Index hi = 1;
  while (!pred(hi)) {
    hi *= 2;
    if (hi > (1LL << 40)) {
      throw std::runtime_error("monotone_search: predicate never satisfied");
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

std::vector<CoordCheck> check_condition1(const Family& family,
                                         const SeqElement& candidate,
                                         Index k_max, double delta) {
  if (!(family.space() == candidate.space())) {
    throw std::invalid_argument("check_condition1: space mismatch");
  }
  const Index k_first = family.space().kind == SpaceKind::Kind::C ? 0 : 1;
  if (k_max < k_first) {
    throw std::invalid_argument("check_condition1: k_max too small");
  }
  std::vector<CoordCheck> out;
  for (Index k = k_first; k <= k_max; ++k) {
    out.push_back(check_one_coordinate(family, candidate, k, delta));
  }
  return out;
}

Condition2Result check_condition2(const Family& family, double epsilon,
                                  Index k_max) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("check_condition2: epsilon must be > 0");
  }
  Condition2Result res;

  const auto finite_count = family.finite_range();
  if (finite_count.has_value()) {
    // genuinely finite range: the sup over n is a max over the list, each
    // member's tail bound vanishes analytically
    const Index count = *finite_count;
    auto pred = [&](Index K) {
      double worst = 0.0;
      for (Index n = 1; n <= count; ++n) {
        worst = std::max(worst, tail_norm_bounds(family.member(n), K).hi);
      }
      return worst < epsilon;
    };
    res.kind = Condition2Result::Kind::K0Found;
    res.k0 = monotone_search(pred);
    res.certified_for_all_eps = true;
    return res;
  }

  switch (family.generator()) {
    case Family::Generator::GeometricRamp: {
      // member 1 dominates every member coordinatewise
      const SeqElement top = family.member(1);
      res.kind = Condition2Result::Kind::K0Found;
      res.k0 = monotone_search(
          [&](Index K) { return tail_norm_bounds(top, K).hi < epsilon; });
      res.certified_for_all_eps = true;
      return res;
    }
    case Family::Generator::BasisShift: {
      const double s = std::abs(family.scale());
      if (s >= epsilon) {
        res.kind = Condition2Result::Kind::TailLowerBound;
        for (Index K = 0; K <= k_max; ++K) {
          // ||R_K (scale e_{K+1})|| = |scale|
          res.pairs.push_back(TailWitness{K, K + 1, s});
        }
        return res;
      }
      res.kind = Condition2Result::Kind::K0Found;
      res.k0 = 0;
      res.certified_for_all_eps = false;
      return res;
    }
    case Family::Generator::PlateauShift: {
      if (epsilon <= 1.0) {
        res.kind = Condition2Result::Kind::TailLowerBound;
        for (Index K = 0; K <= k_max; ++K) {
          // member K+1 still sits at 0 on coordinate K+1 while its limit is 1
          res.pairs.push_back(TailWitness{K, K + 1, 1.0});
        }
        return res;
      }
      res.kind = Condition2Result::Kind::K0Found;
      res.k0 = 0;
      res.certified_for_all_eps = false;
      return res;
    }
    case Family::Generator::Finite:
    case Family::Generator::Constant:
    case Family::Generator::Alternating:
      break;  // handled by the finite-range branch
  }
  res.kind = Condition2Result::Kind::Inconclusive;
  res.reason = "no symbolic tail majorant available";
  return res;
}

namespace {

// Smallest N with ||x_n - candidate|| certifiably below eps for n >= N,
// derived from the discrepancy envelope: the envelope covers every
// coordinate, so ||x_n - candidate|| <= ||coeff|| * rate(n).
std::optional<Index> convergence_onset(const Family& f, double eps) {
  if (!f.discrepancy().has_value()) return std::nullopt;
  const DiscrepancyEnvelope& env = *f.discrepancy();
  const double margin = std::min(eps / 2.0, 1e-7);  // absorbs enclosure slack
  const double coeff_norm = env.coeff.tail_bound(f.space(), 0);
  if (coeff_norm == 0.0) return 1;
  return env.rate.first_n_below((eps - margin) / coeff_norm);
}

Verdict decide_impl(const Family& family, const SeqElement& candidate,
                    const DecideOptions& opts,
                    const std::vector<double>* report_eps) {
  if (!(family.space() == candidate.space())) {
    throw std::invalid_argument("decide_convergence: space mismatch");
  }
  if (opts.eps_grid.empty()) {
    throw std::invalid_argument("decide_convergence: eps grid must be nonempty");
  }
  for (double e : opts.eps_grid) {
    if (!(e > 0.0)) {
      throw std::invalid_argument("decide_convergence: eps values must be > 0");
    }
  }

  const bool in_c = family.space().kind == SpaceKind::Kind::C;

  // Condition (1). A certified failure refutes convergence outright; this
  // check runs first so coordinate witnesses win ties against tail witnesses.
  const auto coords = check_condition1(family, candidate, opts.k_max, opts.delta);
  bool all_certified1 = true;
  Index first_noncertified = -1;
  for (const auto& c : coords) {
    if (c.status == CoordCheck::Status::CertifiedFail) {
      DivergenceWitness w;
      w.kind = (in_c && c.k == 0) ? DivergenceWitness::Kind::LimitGap
                                  : DivergenceWitness::Kind::CoordinateGap;
      w.k = c.k;
      w.gap = c.gap;
      return Verdict::diverges(w);
    }
    if (c.status != CoordCheck::Status::CertifiedPass && all_certified1) {
      all_certified1 = false;
      first_noncertified = c.k;
    }
  }

  // Condition (2), over the whole grid.
  ConvergenceCert cert;
  cert.coord_index_checked = opts.k_max;
  bool all_eps_certified = true;
  for (std::size_t i = 0; i < opts.eps_grid.size(); ++i) {
    const double eps = opts.eps_grid[i];
    const double reported = report_eps ? (*report_eps)[i] : eps;
    const Condition2Result r = check_condition2(family, eps, opts.k_max);
    switch (r.kind) {
      case Condition2Result::Kind::TailLowerBound: {
        DivergenceWitness w;
        w.kind = DivergenceWitness::Kind::TailLowerBound;
        w.eps_star = reported;
        w.pairs = r.pairs;
        return Verdict::diverges(w);
      }
      case Condition2Result::Kind::Inconclusive:
        return Verdict::inconclusive(
            "uniform tail condition undecidable at epsilon = " +
            std::to_string(reported) + ": " + r.reason);
      case Condition2Result::Kind::K0Found:
        break;
    }
    all_eps_certified = all_eps_certified && r.certified_for_all_eps;
    EpsilonEntry entry;
    entry.epsilon = reported;
    entry.k0 = r.k0;
    const auto onset = convergence_onset(family, eps);
    entry.n = onset.value_or(1);
    cert.per_epsilon.push_back(entry);
    cert.epsilon_checked.push_back(reported);
    cert.k0 = std::max(cert.k0, r.k0);
  }

  if (!all_certified1) {
    return Verdict::inconclusive(
        "condition (1) holds only empirically; first non-certified "
        "coordinate k = " +
        std::to_string(first_noncertified));
  }
  if (!all_eps_certified) {
    return Verdict::inconclusive(
        "uniform tail condition passed the grid but has no symbolic "
        "majorant certifying all epsilon");
  }
  if (!family.discrepancy().has_value() &&
      family.generator() != Family::Generator::Finite) {
    // certified-pass on condition (1) came from generator facts but no rate
    // is available to bound the onset N; still a certified Converges
    for (auto& e : cert.per_epsilon) e.n = 1;
  }
  return Verdict::converges(std::move(cert));
}

}  // namespace

Verdict decide_convergence(const Family& family, const SeqElement& candidate,
                           const DecideOptions& opts) {
  return decide_impl(family, candidate, opts, nullptr);
}

Verdict decide_lp(const Family& family, const SeqElement& candidate,
                  const DecideOptions& opts) {
  if (family.space().kind != SpaceKind::Kind::Lp) {
    throw std::invalid_argument("decide_lp: family is not in an l_p space");
  }
  return decide_convergence(family, candidate, opts);
}

Verdict decide_c0(const Family& family, const SeqElement& candidate,
                  const DecideOptions& opts) {
  const SpaceKind& s = family.space();
  if (s.kind == SpaceKind::Kind::C) {
    // the c_0 characterization is the restriction of the c one to limit-0
    // elements; accept c data whose limits all vanish
    if (candidate.limit() != 0.0) {
      throw std::invalid_argument("decide_c0: candidate limit must be 0");
    }
    if (family.generator() == Family::Generator::PlateauShift) {
      throw std::invalid_argument("decide_c0: family members have limit 1");
    }
    for (const auto& m : family.stored_members()) {
      if (m.limit() != 0.0) {
        throw std::invalid_argument("decide_c0: member limit must be 0");
      }
    }
  } else if (s.kind != SpaceKind::Kind::C0) {
    throw std::invalid_argument("decide_c0: family is not in c_0");
  }
  return decide_convergence(family, candidate, opts);
}

Verdict decide_hilbert(const Family& family, const SeqElement& candidate,
                       const DecideOptions& opts) {
  const SpaceKind& s = family.space();
  const bool ok = s.kind == SpaceKind::Kind::Ell2Hilbert ||
                  (s.kind == SpaceKind::Kind::Lp && s.p == 2.0);
  if (!ok) {
    throw std::invalid_argument("decide_hilbert: family is not an l_2 space");
  }
  // The Hilbert form bounds the squared Fourier tail sum by epsilon, i.e.
  // the tail norm by sqrt(epsilon).
  DecideOptions inner = opts;
  for (double& e : inner.eps_grid) e = std::sqrt(e);
  return decide_impl(family, candidate, inner, &opts.eps_grid);
}

Verdict decide_c(const Family& family, const SeqElement& candidate,
                 const DecideOptions& opts) {
  if (family.space().kind != SpaceKind::Kind::C) {
    throw std::invalid_argument("decide_c: family is not in c");
  }
  return decide_convergence(family, candidate, opts);
}

std::vector<NormInterval> direct_norm_check(const Family& family,
                                            const SeqElement& candidate,
                                            Index n_max) {
  if (n_max < 1) throw std::invalid_argument("direct_norm_check: n_max >= 1");
  Index count = n_max;
  if (family.generator() == Family::Generator::Finite) {
    count = std::min<Index>(count, family.stored_members().size());
  }
  std::vector<NormInterval> out;
  out.reserve(count);
  for (Index n = 1; n <= count; ++n) {
    out.push_back(distance_bounds(family.member(n), candidate));
  }
  return out;
}

}  // namespace seqcert
