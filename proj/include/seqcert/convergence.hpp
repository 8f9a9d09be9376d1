#pragma once

#include <string>
#include <vector>

#include "seqcert/family.hpp"

namespace seqcert {

/// Result of the termwise check at one coordinate index. Certified statuses
/// come from symbolic evidence (built-in generator facts or discrepancy
/// envelopes); empirical statuses come from the finite members alone and can
/// never upgrade a verdict past Inconclusive.
struct CoordCheck {
  enum class Status { CertifiedPass, CertifiedFail, EmpiricalPass, EmpiricalFail };
  Index k = 0;
  Status status = Status::EmpiricalPass;
  double gap = 0.0;  // lower bound on limsup_n |c_k(x_n) - c_k(x)| when failing
};

/// One re-checkable pair for a uniform-tail failure: member n has
/// ||R_K x_n|| >= bound.
struct TailWitness {
  Index K = 0;
  Index n = 0;
  double bound = 0.0;
};

struct DivergenceWitness {
  enum class Kind { CoordinateGap, LimitGap, TailLowerBound };
  Kind kind = Kind::CoordinateGap;
  Index k = 0;       // coordinate index (CoordinateGap / LimitGap)
  double gap = 0.0;  // limsup lower bound (CoordinateGap / LimitGap)
  double eps_star = 0.0;              // the epsilon refuted (TailLowerBound)
  std::vector<TailWitness> pairs;     // (K, n, bound) samples (TailLowerBound)
};

/// Per-epsilon certificate entry: K0 satisfies the uniform tail condition at
/// this epsilon, and distances fall below it from member N on.
struct EpsilonEntry {
  double epsilon = 0.0;
  Index k0 = 0;
  Index n = 1;
};

struct ConvergenceCert {
  Index k0 = 0;  // the K0 for the smallest epsilon checked
  std::vector<double> epsilon_checked;
  Index coord_index_checked = 0;
  std::vector<EpsilonEntry> per_epsilon;
};

struct Verdict {
  enum class Tag { Converges, Diverges, Inconclusive };
  Tag tag = Tag::Inconclusive;
  ConvergenceCert cert;         // Converges
  DivergenceWitness witness;    // Diverges
  std::string reason;           // Inconclusive

  static Verdict converges(ConvergenceCert c) {
    Verdict v;
    v.tag = Tag::Converges;
    v.cert = std::move(c);
    return v;
  }
  static Verdict diverges(DivergenceWitness w) {
    Verdict v;
    v.tag = Tag::Diverges;
    v.witness = std::move(w);
    return v;
  }
  static Verdict inconclusive(std::string reason) {
    Verdict v;
    v.tag = Tag::Inconclusive;
    v.reason = std::move(reason);
    return v;
  }
};

/// Outcome of the uniform tail condition at one epsilon.
struct Condition2Result {
  enum class Kind { K0Found, TailLowerBound, Inconclusive };
  Kind kind = Kind::Inconclusive;
  Index k0 = 0;
  bool certified_for_all_eps = false;  // symbolic majorant / finite range
  std::vector<TailWitness> pairs;
  std::string reason;
};

struct DecideOptions {
  std::vector<double> eps_grid = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  Index k_max = 64;
  double delta = 1e-9;
};

/// Termwise coordinate convergence (condition (1)). For the space c the list
/// starts at k = 0 with the limit functional, followed by the raw entries.
std::vector<CoordCheck> check_condition1(const Family& family,
                                         const SeqElement& candidate,
                                         Index k_max, double delta);

/// Uniform tail condition (condition (2)/(2C)): smallest grid K0 with
/// sup_n ||R_K x_n|| < eps, or a re-checkable lower-bound witness.
Condition2Result check_condition2(const Family& family, double epsilon,
                                  Index k_max = 64);

/// The full two-condition characterization: Converges only with symbolic
/// certification of both conditions, Diverges on any certified failure,
/// Inconclusive otherwise.
Verdict decide_convergence(const Family& family, const SeqElement& candidate,
                           const DecideOptions& opts = {});

/// Space-specialized deciders (tail condition phrased per space).
Verdict decide_lp(const Family& family, const SeqElement& candidate,
                  const DecideOptions& opts = {});
Verdict decide_c0(const Family& family, const SeqElement& candidate,
                  const DecideOptions& opts = {});
/// Bounds the squared Fourier tail sum by epsilon (not epsilon squared).
Verdict decide_hilbert(const Family& family, const SeqElement& candidate,
                       const DecideOptions& opts = {});
Verdict decide_c(const Family& family, const SeqElement& candidate,
                 const DecideOptions& opts = {});

/// Independent oracle: per-n enclosures of ||x_n - candidate||.
std::vector<NormInterval> direct_norm_check(const Family& family,
                                            const SeqElement& candidate,
                                            Index n_max);

}  // namespace seqcert
