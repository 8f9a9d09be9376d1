#include "seqcert/basis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace seqcert {

BasisDescriptor BasisDescriptor::finite_rotation(Eigen::MatrixXd q,
                                                 double slack) {
  if (q.rows() != q.cols() || q.rows() < 1) {
    throw std::invalid_argument("finite_rotation: matrix must be square");
  }
  const Eigen::MatrixXd gram = q.transpose() * q;
  const double dev =
      (gram - Eigen::MatrixXd::Identity(q.rows(), q.cols())).cwiseAbs().maxCoeff();
  if (dev > slack) {
    throw std::invalid_argument(
        "finite_rotation: columns not orthonormal (deviation " +
        std::to_string(dev) + ")");
  }
  return BasisDescriptor{Family::FiniteRotation, std::move(q)};
}

BasisDescriptor BasisDescriptor::for_space(const SpaceKind& space) {
  return space.kind == SpaceKind::Kind::C ? c_standard() : standard();
}

void BasisDescriptor::validate_for(const SpaceKind& space) const {
  switch (family) {
    case Family::StandardUnitVectors:
      if (space.kind == SpaceKind::Kind::C) {
        throw std::invalid_argument("basis: c needs the CStandard basis");
      }
      return;
    case Family::CStandard:
      if (space.kind != SpaceKind::Kind::C) {
        throw std::invalid_argument("basis: CStandard only applies to c");
      }
      return;
    case Family::FiniteRotation:
      if (!(space.kind == SpaceKind::Kind::Ell2Hilbert ||
            (space.kind == SpaceKind::Kind::Lp && space.p == 2.0))) {
        throw std::invalid_argument("basis: FiniteRotation requires l_2");
      }
      return;
  }
}

namespace {

// Raw entries x_1..x_n as an exact vector; throws when the tail envelope
// leaves some of them undetermined.
Vector exact_entries(const SeqElement& x, Index n) {
  Vector v(n);
  for (Index k = 1; k <= n; ++k) v(k - 1) = x.entry_exact(k);
  return v;
}

}  // namespace

SeqElement apply_S(const SeqElement& x, Index K, const BasisDescriptor& basis) {
  basis.validate_for(x.space());
  if (K < 0) throw std::invalid_argument("apply_S: K must be >= 0");
  switch (basis.family) {
    case BasisDescriptor::Family::StandardUnitVectors:
      return SeqElement(x.space(), exact_entries(x, K), TailModel::zero());
    case BasisDescriptor::Family::CStandard:
      // c_0 e_0 + sum_{k<=K} c_k e_k = (x_1, ..., x_K, L, L, ...)
      return SeqElement(x.space(), exact_entries(x, K), TailModel::zero(),
                        x.limit());
    case BasisDescriptor::Family::FiniteRotation: {
      const Index d = basis.rotation_dim();
      const Index n = std::max(K, d);
      const Vector head = exact_entries(x, n);
      Vector out = Vector::Zero(n);
      const Index kr = std::min(K, d);
      if (kr > 0) {
        const auto q = basis.rotation.leftCols(kr);
        out.head(d) = q * (q.transpose() * head.head(d));
      }
      for (Index k = d + 1; k <= K; ++k) out(k - 1) = head(k - 1);
      return SeqElement(x.space(), std::move(out), TailModel::zero());
    }
  }
  throw std::logic_error("apply_S: unknown basis family");
}

SeqElement apply_R(const SeqElement& x, Index K, const BasisDescriptor& basis) {
  basis.validate_for(x.space());
  if (K < 0) throw std::invalid_argument("apply_R: K must be >= 0");
  const Index m = x.prefix_length();
  switch (basis.family) {
    case BasisDescriptor::Family::StandardUnitVectors: {
      Vector out = Vector::Zero(std::max(K, m));
      for (Index k = K + 1; k <= m; ++k) out(k - 1) = x.prefix()(k - 1);
      return SeqElement(x.space(), std::move(out), x.tail());
    }
    case BasisDescriptor::Family::CStandard: {
      // (0, ..., 0, x_{K+1} - L, x_{K+2} - L, ...), limit 0
      Vector out = Vector::Zero(std::max(K, m));
      for (Index k = K + 1; k <= m; ++k) {
        out(k - 1) = x.prefix()(k - 1) - x.limit();
      }
      return SeqElement(x.space(), std::move(out), x.tail(), 0.0);
    }
    case BasisDescriptor::Family::FiniteRotation: {
      const SeqElement s = apply_S(x, K, basis);
      const Index n = std::max({K, m, s.prefix_length()});
      Vector out(n);
      for (Index k = 1; k <= n; ++k) {
        const double xv =
            k <= m ? x.prefix()(k - 1) : x.entry_exact(k);
        const double sv =
            k <= s.prefix_length() ? s.prefix()(k - 1) : 0.0;
        out(k - 1) = xv - sv;
      }
      return SeqElement(x.space(), std::move(out), x.tail());
    }
  }
  throw std::logic_error("apply_R: unknown basis family");
}

std::vector<double> expand(const SeqElement& x, const BasisDescriptor& basis,
                           Index K, double delta) {
  basis.validate_for(x.space());
  if (K < 0) throw std::invalid_argument("expand: K must be >= 0");
  const Index m = x.prefix_length();

  auto resolve_entry = [&](Index k) -> double {
    if (k <= m) return x.prefix()(k - 1);
    if (x.tail().envelope(k) <= delta) return x.limit();
    throw std::runtime_error("expand: coordinate " + std::to_string(k) +
                             " not determinable to within delta");
  };

  std::vector<double> coords;
  switch (basis.family) {
    case BasisDescriptor::Family::StandardUnitVectors:
      for (Index k = 1; k <= K; ++k) coords.push_back(resolve_entry(k));
      return coords;
    case BasisDescriptor::Family::CStandard:
      coords.push_back(x.limit());
      for (Index k = 1; k <= K; ++k) {
        coords.push_back(resolve_entry(k) - x.limit());
      }
      return coords;
    case BasisDescriptor::Family::FiniteRotation: {
      const Index d = basis.rotation_dim();
      for (Index k = 1; k <= K; ++k) {
        if (k > d) {
          coords.push_back(resolve_entry(k));
          continue;
        }
        // c_k = <x, Q e_k>; the rotated vector is supported on 1..d, with
        // envelope-bounded error from any undetermined head entries.
        double value = 0.0, err = 0.0;
        for (Index i = 1; i <= d; ++i) {
          const double w = basis.rotation(i - 1, k - 1);
          if (i <= m) {
            value += w * x.prefix()(i - 1);
          } else {
            value += w * x.limit();
            err += std::abs(w) * x.tail().envelope(i);
          }
        }
        if (err > delta) {
          throw std::runtime_error("expand: coordinate " + std::to_string(k) +
                                   " not determinable to within delta");
        }
        coords.push_back(value);
      }
      return coords;
    }
  }
  throw std::logic_error("expand: unknown basis family");
}

SeqElement reconstruct(const SpaceKind& space, const BasisDescriptor& basis,
                       const std::vector<double>& coords,
                       std::optional<double> limit_coord) {
  basis.validate_for(space);
  if (limit_coord.has_value() &&
      basis.family != BasisDescriptor::Family::CStandard) {
    throw std::invalid_argument("reconstruct: limit coordinate only valid in c");
  }
  const Index n = static_cast<Index>(coords.size());
  switch (basis.family) {
    case BasisDescriptor::Family::StandardUnitVectors: {
      Vector prefix(n);
      for (Index k = 0; k < n; ++k) prefix(k) = coords[k];
      return SeqElement(space, std::move(prefix), TailModel::zero());
    }
    case BasisDescriptor::Family::CStandard: {
      const double c0 = limit_coord.value_or(0.0);
      Vector prefix(n);
      for (Index k = 0; k < n; ++k) prefix(k) = coords[k] + c0;
      return SeqElement(space, std::move(prefix), TailModel::zero(), c0);
    }
    case BasisDescriptor::Family::FiniteRotation: {
      const Index d = basis.rotation_dim();
      Vector prefix = Vector::Zero(std::max(n, d));
      const Index kr = std::min(n, d);
      for (Index k = 1; k <= kr; ++k) {
        prefix.head(d) += coords[k - 1] * basis.rotation.col(k - 1);
      }
      for (Index k = d + 1; k <= n; ++k) prefix(k - 1) = coords[k - 1];
      return SeqElement(space, std::move(prefix), TailModel::zero());
    }
  }
  throw std::logic_error("reconstruct: unknown basis family");
}

NormInterval y_norm(const SeqElement& x, const BasisDescriptor& basis, Index N,
                    double slack) {
  basis.validate_for(x.space());
  if (N < 1) throw std::invalid_argument("y_norm: N must be >= 1");
  const Index n0 = basis.family == BasisDescriptor::Family::CStandard ? 0 : 1;
  double lo = 0.0, hi = 0.0;
  for (Index n = n0; n <= N; ++n) {
    const NormInterval b = norm_bounds(apply_S(x, n, basis), slack);
    lo = std::max(lo, b.lo);
    hi = std::max(hi, b.hi);
  }
  // For these bases each S_n is a norm-nonincreasing truncation, so ||x||
  // majorizes the full supremum.
  hi = std::max(hi, norm_bounds(x, slack).hi);
  return NormInterval(lo, hi);
}

namespace {

// One sampled unit-norm element: random support of size <= 32 within the
// first 64 indices, coordinates uniform on [-1, 1] (plus a limit coordinate
// in c), normalized.
SeqElement sample_element(const SpaceKind& space, std::mt19937_64& rng,
                          Index min_len) {
  std::uniform_int_distribution<int> support_size(1, 32);
  std::uniform_int_distribution<Index> pick_index(1, 64);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);

  const int sz = support_size(rng);
  Vector prefix = Vector::Zero(std::max<Index>(64, min_len));
  for (int i = 0; i < sz; ++i) {
    prefix(pick_index(rng) - 1) = coord(rng);
  }
  double limit = 0.0;
  if (space.kind == SpaceKind::Kind::C) limit = coord(rng);
  SeqElement x(space, std::move(prefix), TailModel::zero(), limit);
  const double nrm = norm_bounds(x, 0.0).lo;
  if (nrm < 1e-12) return SeqElement::basis_vector(space, 1);
  return x.scaled(1.0 / nrm);
}

}  // namespace

double estimate_operator_norm(const OperatorSpec& op, const SpaceKind& space,
                              const BasisDescriptor& basis, int trials,
                              std::uint64_t seed) {
  basis.validate_for(space);
  if (trials < 1) throw std::invalid_argument("estimate_operator_norm: trials >= 1");
  const Index min_len =
      std::max<Index>(op.index + 1, basis.rotation_dim());
  double best = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::seed_seq sseq{static_cast<std::uint64_t>(seed),
                       static_cast<std::uint64_t>(t)};
    std::mt19937_64 rng(sseq);
    const SeqElement x = sample_element(space, rng, min_len);
    double value = 0.0;
    switch (op.kind) {
      case OperatorSpec::Kind::PartialSum:
        value = norm_bounds(apply_S(x, op.index, basis), 0.0).lo;
        break;
      case OperatorSpec::Kind::Remainder:
        value = norm_bounds(apply_R(x, op.index, basis), 0.0).lo;
        break;
      case OperatorSpec::Kind::CoordinateFunctional: {
        if (basis.family == BasisDescriptor::Family::FiniteRotation) {
          value = std::abs(expand(x, basis, op.index).back());
        } else {
          const Interval c = coordinate(x, op.index);
          value = std::max(std::abs(c.lo), std::abs(c.hi));
        }
        break;
      }
    }
    best = std::max(best, value);
  }
  return best;
}

}  // namespace seqcert
