#pragma once
// Shared helpers for the unit and acceptance suites: deterministic random
// draws of gram matrices, invertible bases, and admissible frame coefficients.

#include <nilricci/nilricci.hpp>

#include <random>

namespace nilricci::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng &r, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(r);
}

inline Mat5 rand_matrix(Rng &r, double lo = -1.0, double hi = 1.0) {
  Mat5 m;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m(i, j) = uniform(r, lo, hi);
  return m;
}

inline Vec5 rand_vector(Rng &r, double lo = -1.0, double hi = 1.0) {
  Vec5 v;
  for (int i = 0; i < N; ++i) v[i] = uniform(r, lo, hi);
  return v;
}

// well-conditioned random SPD matrix
inline Mat5 rand_spd(Rng &r) {
  const Mat5 m = rand_matrix(r);
  Mat5 s = m * m.transpose() + 0.5 * Mat5::Identity();
  return 0.5 * (s + s.transpose());
}

inline Mat5 rand_invertible(Rng &r) {
  for (;;) {
    const Mat5 m = rand_matrix(r);
    if (std::abs(m.determinant()) > 0.05) return m;
  }
}

// random coefficients satisfying the sign domain; strict = printed pattern
// (extension slots zero)
inline Coeffs rand_strict_coeffs(AlgebraId id, Rng &r) {
  auto u = [&r] { return uniform(r, 0.2, 2.0); };
  auto s = [&r] { return uniform(r, -2.0, 2.0); };
  switch (id) {
    case AlgebraId::FiveA1:
      return {};
    case AlgebraId::A54:
      return {{"alpha", s()}, {"beta", u()}, {"gamma", u()}};
    case AlgebraId::A31plus2A1:
      return {{"alpha", u()}};
    case AlgebraId::A41plusA1:
      return {{"alpha", u()},
              {"beta", u()},
              {"gamma", s()},
              {"case", double(1 + (r() & 1))}};
    case AlgebraId::A56:
      return {{"alpha", -u()}, {"beta", s()},    {"gamma", u()},
              {"delta", s()},  {"epsilon", u()}, {"sigma", u()}};
    case AlgebraId::A55:
    case AlgebraId::A53:
      return {{"alpha", u()}, {"beta", s()}, {"gamma", u()},
              {"delta", s()}, {"epsilon", u()}};
    case AlgebraId::A51:
      return {{"alpha", u()}, {"beta", s()}, {"gamma", u()}};
    case AlgebraId::A52:
      return {{"alpha", u()}, {"beta", s()}, {"gamma", u()}, {"delta", u()}};
  }
  return {};
}

// forward-generated prescribed-Ricci target for the draw
inline Mat5 forward_target(AlgebraId id, const Coeffs &co) {
  return ricci_orthonormal(pattern_tensor(id, co));
}

// bound R-valued coefficients away from zero (negatives tests flip couplings)
inline Coeffs rand_coupled_coeffs(AlgebraId id, Rng &r) {
  Coeffs co = rand_strict_coeffs(id, r);
  for (auto &[k, v] : co) {
    if (k == "case") continue;
    if (std::abs(v) < 0.3) v = 0.35 * (v >= 0 ? 1.0 : -1.0) * (1 + uniform(r, 0, 1));
  }
  return co;
}

inline double maxabs(const Mat5 &m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace nilricci::testing
