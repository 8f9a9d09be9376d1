#pragma once

// Test-only oracles: brute-force norms over long explicit truncations and a
// seeded random-fixture generator. Independent of the enclosure code paths
// they are used to check.

#include <cmath>
#include <random>
#include <vector>

#include "seqcert/element.hpp"

namespace seqcert::testing {

// Norm of an explicit truncation (entries are the raw x_1..x_M values).
inline double brute_norm(const SpaceKind& space,
                         const std::vector<double>& entries,
                         double limit = 0.0) {
  if (space.sup_norm()) {
    double m = space.kind == SpaceKind::Kind::C ? std::abs(limit) : 0.0;
    for (double v : entries) m = std::max(m, std::abs(v));
    return m;
  }
  double acc = 0.0;
  for (double v : entries) acc += std::pow(std::abs(v), space.exponent());
  return std::pow(acc, 1.0 / space.exponent());
}

// ||R_K x|| of an explicit truncation (recentred by the limit in c).
inline double brute_tail_norm(const SpaceKind& space,
                              const std::vector<double>& entries, Index K,
                              double limit = 0.0) {
  const bool in_c = space.kind == SpaceKind::Kind::C;
  double acc = 0.0;
  for (std::size_t i = static_cast<std::size_t>(K); i < entries.size(); ++i) {
    const double v = std::abs(entries[i] - (in_c ? limit : 0.0));
    if (space.sup_norm()) {
      acc = std::max(acc, v);
    } else {
      acc += std::pow(v, space.exponent());
    }
  }
  return space.sup_norm() ? acc : std::pow(acc, 1.0 / space.exponent());
}

// Explicit truncation of an element whose tail entries sit exactly on the
// envelope (worst case for enclosure-soundness checks): x_k = limit + env(k)
// past the prefix.
inline std::vector<double> envelope_truncation(const SeqElement& x, Index M) {
  std::vector<double> out;
  for (Index k = 1; k <= M; ++k) {
    if (k <= x.prefix_length()) {
      out.push_back(x.prefix()(k - 1));
    } else {
      out.push_back(x.limit() + x.tail().envelope(k));
    }
  }
  return out;
}

inline SpaceKind random_space(std::mt19937_64& rng) {
  switch (rng() % 5) {
    case 0: return SpaceKind::lp(1.0);
    case 1: return SpaceKind::lp(2.0);
    case 2: return SpaceKind::c0();
    case 3: return SpaceKind::c();
    default: return SpaceKind::hilbert();
  }
}

inline TailModel random_tail(std::mt19937_64& rng, const SpaceKind& space) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  switch (rng() % 3) {
    case 0:
      return TailModel::zero();
    case 1:
      return TailModel::geometric(2.0 * unit(rng), 0.9 * unit(rng));
    default: {
      // keep s*p > 1 in every supported l_p
      const double s = 1.5 + 2.0 * unit(rng);
      (void)space;
      return TailModel::power(2.0 * unit(rng), s);
    }
  }
}

inline SeqElement random_element(std::mt19937_64& rng) {
  const SpaceKind space = random_space(rng);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  const Index m = static_cast<Index>(rng() % 12);
  Vector prefix(m);
  for (Index i = 0; i < m; ++i) prefix(i) = coord(rng);
  const double limit =
      space.kind == SpaceKind::Kind::C ? coord(rng) : 0.0;
  return SeqElement(space, std::move(prefix), random_tail(rng, space), limit);
}

}  // namespace seqcert::testing
