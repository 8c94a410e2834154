#pragma once
// Milnor frames: for each algebra a deterministic construction of an
// S-orthonormal basis realizing the per-family bracket pattern
//   [v_i, v_j] = (named coefficient) v_k   over a short list of slots,
// plus conversions between coefficient tuples and frame-level structure
// constants.  Three families (A4,1+A1, A5,6, A5,2) need extension slots
// (tau, tau1, tau2) beyond the printed pattern: for generic S the printed
// strict pattern is unrealizable (see docs/ERRATA.md); the extension slots
// are exact and all downstream identities hold for them.

#include "core.hpp"
#include "linalg.hpp"
#include "ricci.hpp"

#include <functional>

namespace nilricci {

struct PatternSlot {
  int i, j, k;       // 1-based: [v_i, v_j] component on v_k
  const char *name;  // coefficient name
};

// extended pattern slots per algebra (strict printed pattern = these minus
// the tau's)
inline const std::vector<PatternSlot> &pattern_slots(AlgebraId id) {
  static const std::map<AlgebraId, std::vector<PatternSlot>> lut = {
      {AlgebraId::FiveA1, {}},
      {AlgebraId::A54,
       {{1, 3, 5, "alpha"}, {1, 4, 5, "beta"}, {2, 3, 5, "gamma"}}},
      {AlgebraId::A31plus2A1, {{1, 2, 5, "alpha"}}},
      {AlgebraId::A41plusA1,
       {{1, 2, 3, "alpha"}, {1, 2, 4, "gamma"}, {1, 2, 5, "tau"}, {1, 3, 5, "beta"}}},
      {AlgebraId::A56,
       {{1, 2, 3, "alpha"}, {1, 2, 4, "beta"}, {1, 2, 5, "tau"},
        {1, 3, 4, "gamma"}, {1, 3, 5, "delta"}, {1, 4, 5, "epsilon"},
        {2, 3, 5, "sigma"}}},
      {AlgebraId::A55,
       {{1, 2, 4, "alpha"}, {1, 2, 5, "beta"}, {1, 3, 5, "gamma"},
        {2, 3, 5, "delta"}, {2, 4, 5, "epsilon"}}},
      {AlgebraId::A53,
       {{1, 2, 3, "alpha"}, {1, 2, 4, "beta"}, {1, 3, 4, "gamma"},
        {1, 3, 5, "delta"}, {2, 3, 5, "epsilon"}}},
      {AlgebraId::A51,
       {{1, 2, 4, "alpha"}, {1, 2, 5, "beta"}, {1, 3, 5, "gamma"}}},
      {AlgebraId::A52,
       {{1, 2, 3, "alpha"}, {1, 2, 4, "beta"}, {1, 2, 5, "tau1"},
        {1, 3, 4, "gamma"}, {1, 3, 5, "tau2"}, {1, 4, 5, "delta"}}},
  };
  return lut.at(id);
}

// sign-constrained coefficients: (name, +1 must be > 0 / -1 must be < 0)
inline const std::vector<std::pair<std::string, int>> &
coefficient_sign_domain(AlgebraId id) {
  static const std::map<AlgebraId, std::vector<std::pair<std::string, int>>>
      lut = {
          {AlgebraId::FiveA1, {}},
          {AlgebraId::A54, {{"beta", 1}, {"gamma", 1}}},
          {AlgebraId::A31plus2A1, {{"alpha", 1}}},
          {AlgebraId::A41plusA1, {{"alpha", 1}, {"beta", 1}}},
          {AlgebraId::A56,
           {{"alpha", -1}, {"gamma", 1}, {"epsilon", 1}, {"sigma", 1}}},
          {AlgebraId::A55, {{"alpha", 1}, {"gamma", 1}, {"epsilon", 1}}},
          {AlgebraId::A53, {{"alpha", 1}, {"gamma", 1}, {"epsilon", 1}}},
          {AlgebraId::A51, {{"alpha", 1}, {"gamma", 1}}},
          {AlgebraId::A52, {{"alpha", 1}, {"gamma", 1}, {"delta", 1}}},
      };
  return lut.at(id);
}

// Structure tensor of the pattern with the given coefficients.  For A4,1+A1 a
// "case" entry (1 or 2) selects the printed branch ([v1,v2] second component
// on v5 resp. v4, named gamma); without it the unified extended pattern
// [v1,v2] = alpha v3 + gamma v4 + tau v5 is used.
inline StructureConstants pattern_tensor(AlgebraId id, const Coeffs &co) {
  StructureConstants a{};
  if (id == AlgebraId::A41plusA1 && co.count("case")) {
    const int cs = int(coeff(co, "case"));
    a.put1(1, 2, 3, coeff(co, "alpha"));
    a.put1(1, 2, cs == 1 ? 5 : 4, coeff(co, "gamma"));
    a.put1(1, 3, 5, coeff(co, "beta"));
    return a;
  }
  for (const auto &s : pattern_slots(id)) a.put1(s.i, s.j, s.k, coeff(co, s.name));
  return a;
}

// synthesize the frame-basis structure constants, validating sign domains
inline StructureConstants frame_structure_constants(AlgebraId id,
                                                    const Coeffs &co) {
  for (const auto &[name, want] : coefficient_sign_domain(id)) {
    const double v = coeff(co, name);
    if (want * v <= 0.0)
      throw std::invalid_argument(
          "coefficient " + name + " violates its sign domain (" +
          (want > 0 ? "must be > 0" : "must be < 0") + ")");
  }
  return pattern_tensor(id, co);
}

// expand all frame brackets in the frame basis: F_ij = V^{-1} [V e_i, V e_j]
inline StructureConstants frame_tensor(const Mat5 &V,
                                       const StructureConstants &sc) {
  Eigen::PartialPivLU<Mat5> lu(V);
  StructureConstants F{};
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      Vec5 x = lu.solve(bracket(sc, Vec5(V.col(i)), Vec5(V.col(j))));
      for (int k = 0; k < N; ++k) {
        F.c[i][j][k] = x[k];
        F.c[j][i][k] = -x[k];
      }
    }
  return F;
}

// extract the named pattern coefficients of the frame V; any bracket
// component outside the (extended) pattern above `tol` is a hard error
inline Coeffs frame_coefficients(AlgebraId id, const Mat5 &V,
                                 const StructureConstants &sc,
                                 double tol = 1e-8) {
  const StructureConstants F = frame_tensor(V, sc);
  const auto &slots = pattern_slots(id);
  auto on_pattern = [&slots](int i, int j, int k) {
    for (const auto &s : slots)
      if (s.i - 1 == i && s.j - 1 == j && s.k - 1 == k) return true;
    return false;
  };
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      for (int k = 0; k < N; ++k)
        if (!on_pattern(i, j, k) && std::abs(F.c[i][j][k]) > tol)
          throw std::runtime_error(
              "bracket component outside the pattern: [v" +
              std::to_string(i + 1) + ",v" + std::to_string(j + 1) + "] on v" +
              std::to_string(k + 1) + " = " + std::to_string(F.c[i][j][k]));
  Coeffs co;
  for (const auto &s : slots) co[s.name] = F.c[s.i - 1][s.j - 1][s.k - 1];
  return co;
}

// Ricci (0,2)-tensor in reference-basis coordinates, computed through the
// S-orthonormal frame V: Ric_e = V^{-T} Ric_frame V^{-1}
inline Mat5 ricci_reference_basis(const Mat5 &V, const StructureConstants &sc) {
  const Mat5 Rf = ricci_orthonormal(frame_tensor(V, sc));
  const Mat5 Vi = V.inverse();
  return Vi.transpose() * Rf * Vi;
}

// distance of an extended coefficient tuple from the strict printed pattern
inline double strict_pattern_residual(AlgebraId id, const Coeffs &co) {
  switch (id) {
    case AlgebraId::A41plusA1:  // best of case 1 (gamma = 0) / case 2 (tau = 0)
      return std::min(std::abs(coeff(co, "gamma")), std::abs(coeff(co, "tau")));
    case AlgebraId::A56:
      return std::abs(coeff(co, "tau"));
    case AlgebraId::A52:
      return std::max(std::abs(coeff(co, "tau1")), std::abs(coeff(co, "tau2")));
    default:
      return 0.0;
  }
}

// ---- frame builders ---------------------------------------------------------

namespace detail {

inline std::pair<Mat5, Coeffs> build_5A1(const Mat5 &S) {
  Mat5 L = Eigen::LLT<Mat5>(S).matrixL();
  Mat5 V = L.triangularView<Eigen::Lower>().solve(Mat5::Identity()).transpose();
  return {V, {}};
}

inline std::pair<Mat5, Coeffs> build_A31(const Mat5 &S) {
  const StructureConstants &c = catalog_sc(AlgebraId::A31plus2A1);
  Vec5 v5 = unit_s(S, Vec5::Unit(4));
  auto w = s_section(S, {0, 1}, {2, 3, 4});
  auto v = gram_schmidt_s(S, {w[0], w[1]});
  Vec5 v1 = v[0], v2 = v[1];
  double alpha = sdot(S, bracket(c, v1, v2), v5);
  if (alpha < 0) {
    v2 = -v2;
    alpha = -alpha;
  }
  Vec5 v3 = unit_s(S, Vec5(Vec5::Unit(2) - sdot(S, Vec5::Unit(2), v5) * v5));
  Vec5 v4 = unit_s(S, Vec5(Vec5::Unit(3) - sdot(S, Vec5::Unit(3), v5) * v5 -
                           sdot(S, Vec5::Unit(3), v3) * v3));
  Mat5 V;
  V << v1, v2, v3, v4, v5;
  return {V, {{"alpha", alpha}}};
}

// top eigenvector of a symmetric 4x4, signed so its largest-amplitude entry
// (first maximum) is positive
inline std::pair<Eigen::Vector4d, double> top_eigvec(const Eigen::Matrix4d &M) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(M);
  Eigen::Vector4d z = es.eigenvectors().col(3);  // eigenvalues ascend
  int arg = 0;
  for (int k = 1; k < 4; ++k)
    if (std::abs(z[k]) > std::abs(z[arg])) arg = k;
  if (z[arg] < 0) z = -z;
  return {z, es.eigenvalues()[3]};
}

inline std::pair<Mat5, Coeffs> build_A54(const Mat5 &S) {
  auto us = s_section(S, {0, 1, 2, 3}, {4});
  auto bs = gram_schmidt_s(S, us);
  const double n5 = snorm(S, Vec5::Unit(4));
  // the symplectic pairing of the brackets, in the orthonormal section basis
  auto om = [](const Vec5 &x, const Vec5 &y) {
    return x[0] * y[3] - x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
  };
  Eigen::Matrix4d W;
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) W(k, l) = om(bs[size_t(k)], bs[size_t(l)]);
  const Eigen::Matrix4d B = -W * W;
  auto [z1, lam1] = top_eigvec(B);
  const double s1 = std::sqrt(lam1);
  const Eigen::Vector4d z2 = -(W * z1) / s1;
  const Eigen::Matrix4d P =
      Eigen::Matrix4d::Identity() - z1 * z1.transpose() - z2 * z2.transpose();
  auto [z3, lam2] = top_eigvec(Eigen::Matrix4d(P * B * P));
  const double s2 = std::sqrt(lam2);
  const Eigen::Vector4d z4 = -(W * z3) / s2;
  Eigen::Matrix<double, 5, 4> U;
  for (int k = 0; k < 4; ++k) U.col(k) = bs[size_t(k)];
  Mat5 V;
  V << U * z1, U * z3, U * z4, U * z2, Vec5::Unit(4) / n5;
  return {V, {{"alpha", 0.0}, {"beta", s1 * n5}, {"gamma", s2 * n5}}};
}

inline std::pair<Mat5, Coeffs> build_A41(const Mat5 &S) {
  const StructureConstants &c = catalog_sc(AlgebraId::A41plusA1);
  Vec5 v5 = unit_s(S, Vec5::Unit(4));
  Vec5 v4 = unit_s(S, Vec5(Vec5::Unit(3) - sdot(S, Vec5::Unit(3), v5) * v5));
  Vec5 v3 = unit_s(S, Vec5(Vec5::Unit(2) - sdot(S, Vec5::Unit(2), v4) * v4 -
                           sdot(S, Vec5::Unit(2), v5) * v5));
  auto h = s_section(S, {0, 1}, {2, 3, 4});
  Vec5 v2 = unit_s(S, h[1]);  // in H with x1 = 0
  Vec5 v1 = unit_s(S, Vec5(h[0] - sdot(S, h[0], v2) * v2));
  if (sdot(S, bracket(c, v1, v3), v5) < 0) v1 = -v1;
  if (sdot(S, bracket(c, v1, v2), v3) < 0) v2 = -v2;
  Mat5 V;
  V << v1, v2, v3, v4, v5;
  const Vec5 w = bracket(c, v1, v2);
  Coeffs co{{"alpha", sdot(S, w, v3)},
            {"gamma", sdot(S, w, v4)},
            {"tau", sdot(S, w, v5)},
            {"beta", sdot(S, bracket(c, v1, v3), v5)}};
  return {V, co};
}

inline std::pair<Mat5, Coeffs> build_A55(const Mat5 &S) {
  const StructureConstants &c = catalog_sc(AlgebraId::A55);
  Vec5 v5 = unit_s(S, Vec5::Unit(4));
  Vec5 v4 = unit_s(S, Vec5(Vec5::Unit(3) - sdot(S, Vec5::Unit(3), v5) * v5));
  auto h = s_section(S, {0, 1, 2}, {3, 4});
  Vec5 v3 = unit_s(S, h[2]);
  Vec5 v1 = unit_s(S, Vec5(h[0] - sdot(S, h[0], v3) * v3));
  Vec5 v2 = unit_s(S, Vec5(h[1] - sdot(S, h[1], v3) * v3 -
                           sdot(S, h[1], v1) * v1));
  if (sdot(S, bracket(c, v2, v4), v5) < 0) v2 = -v2;  // epsilon > 0
  if (sdot(S, bracket(c, v1, v2), v4) < 0) v1 = -v1;  // alpha > 0
  if (sdot(S, bracket(c, v1, v3), v5) < 0) v3 = -v3;  // gamma > 0
  Mat5 V;
  V << v1, v2, v3, v4, v5;
  Coeffs co{{"alpha", sdot(S, bracket(c, v1, v2), v4)},
            {"beta", sdot(S, bracket(c, v1, v2), v5)},
            {"gamma", sdot(S, bracket(c, v1, v3), v5)},
            {"delta", sdot(S, bracket(c, v2, v3), v5)},
            {"epsilon", sdot(S, bracket(c, v2, v4), v5)}};
  return {V, co};
}

inline std::pair<Mat5, Coeffs> build_A53(const Mat5 &S) {
  const StructureConstants &c = catalog_sc(AlgebraId::A53);
  Vec5 v3 = unit_s(S, s_section(S, {2}, {3, 4})[0]);  // e3-coefficient > 0
  auto us = gram_schmidt_s(S, s_section(S, {0, 1}, {2, 3, 4}));
  const Vec5 u1 = us[0], u2 = us[1];
  const Vec5 w = bracket(c, u1, u2);
  const double c3 = w[2] / v3[2];  // v3-component of w, via the e3 coordinate
  const Vec5 wz = w - c3 * v3;     // remainder in the center directions
  auto Bv = [&](const Vec5 &x) { return bracket(c, x, v3); };
  Vec5 v4 = snorm(S, wz) >= 1e-9 * std::max(1.0, snorm(S, w))
                ? unit_s(S, wz)
                : unit_s(S, Bv(u1));
  const Vec5 ra = Vec5::Unit(3) - sdot(S, Vec5::Unit(3), v4) * v4;
  Vec5 v5 = snorm(S, ra) >= 0.5 * snorm(S, Vec5::Unit(3))
                ? unit_s(S, ra)
                : unit_s(S, Vec5(Vec5::Unit(4) -
                                 sdot(S, Vec5::Unit(4), v4) * v4));
  const double b1 = sdot(S, Bv(u1), v4);
  const double b2 = sdot(S, Bv(u2), v4);
  Eigen::Vector2d cc(-b2, b1);
  cc /= std::hypot(b1, b2);
  // deterministic sign: largest-amplitude component (first maximum) positive
  if (std::abs(cc[0]) >= std::abs(cc[1])) {
    if (cc[0] < 0) cc = -cc;
  } else if (cc[1] < 0) {
    cc = -cc;
  }
  Vec5 v2 = cc[0] * u1 + cc[1] * u2;
  Vec5 v1 = cc[1] * u1 - cc[0] * u2;
  if (sdot(S, Bv(v1), v4) < 0) v1 = -v1;                  // gamma > 0
  if (sdot(S, bracket(c, v1, v2), v3) < 0) v2 = -v2;      // alpha > 0
  if (sdot(S, bracket(c, v2, v3), v5) < 0) v5 = -v5;      // epsilon > 0
  Mat5 V;
  V << v1, v2, v3, v4, v5;
  const Vec5 w12 = bracket(c, v1, v2);
  Coeffs co{{"alpha", sdot(S, w12, v3)},
            {"beta", sdot(S, w12, v4)},
            {"gamma", sdot(S, Bv(v1), v4)},
            {"delta", sdot(S, Bv(v1), v5)},
            {"epsilon", sdot(S, Bv(v2), v5)}};
  return {V, co};
}

inline std::pair<Mat5, Coeffs> build_A51(const Mat5 &S) {
  const StructureConstants &c = catalog_sc(AlgebraId::A51);
  auto h = s_section(S, {0, 1, 2}, {3, 4});
  auto ks = gram_schmidt_s(S, {h[1], h[2]});  // K = H with x1 = 0
  const Vec5 k1 = ks[0], k2 = ks[1];
  Vec5 v1 = unit_s(S, Vec5(h[0] - sdot(S, h[0], k1) * k1 -
                           sdot(S, h[0], k2) * k2));
  auto zs = gram_schmidt_s(S, {Vec5::Unit(3), Vec5::Unit(4)});
  Vec5 v4 = zs[0], v5 = zs[1];
  // 2x2 map K -> Z of x |-> [v1, x], rows = Z-coordinates; LQ by
  // Gram-Schmidt on its rows gives alpha, gamma >= 0 directly
  Eigen::Matrix2d M0;
  for (int q = 0; q < 2; ++q) {
    const Vec5 w = bracket(c, v1, q == 0 ? k1 : k2);
    M0(0, q) = sdot(S, w, v4);
    M0(1, q) = sdot(S, w, v5);
  }
  const Eigen::RowVector2d r0 = M0.row(0), r1 = M0.row(1);
  double alpha = r0.norm();
  const Eigen::RowVector2d q0 = r0 / alpha;
  double beta = r1.dot(q0);
  const Eigen::RowVector2d r1p = r1 - beta * q0;
  double gamma = r1p.norm();
  const Eigen::RowVector2d q1 = r1p / gamma;
  Vec5 v2 = q0[0] * k1 + q0[1] * k2;
  Vec5 v3 = q1[0] * k1 + q1[1] * k2;
  if (alpha < 0) {  // unreachable with the Gram-Schmidt LQ; kept for clarity
    v4 = -v4;
    alpha = -alpha;
  }
  if (gamma < 0) {
    v5 = -v5;
    beta = -beta;
    gamma = -gamma;
  }
  Mat5 V;
  V << v1, v2, v3, v4, v5;
  return {V, {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}}};
}

// shared flag for A5,6 / A5,2: v5 ~ e5, v4 from the second central direction,
// v3 from the first derived direction, then the H-section split
inline Mat5 flag_frame(const Mat5 &S, int g1_idx, int g2_idx) {
  Vec5 v5 = unit_s(S, Vec5::Unit(4));
  Vec5 v4 = unit_s(S, Vec5(Vec5::Unit(g2_idx) -
                           sdot(S, Vec5::Unit(g2_idx), v5) * v5));
  Vec5 v3 = unit_s(S, Vec5(Vec5::Unit(g1_idx) -
                           sdot(S, Vec5::Unit(g1_idx), v4) * v4 -
                           sdot(S, Vec5::Unit(g1_idx), v5) * v5));
  auto h = s_section(S, {0, 1}, {2, 3, 4});
  Vec5 v2 = unit_s(S, h[1]);
  Vec5 v1 = unit_s(S, Vec5(h[0] - sdot(S, h[0], v2) * v2));
  Mat5 V;
  V << v1, v2, v3, v4, v5;
  return V;
}

inline double sign_of(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

inline std::pair<Mat5, Coeffs> build_A56(const Mat5 &S) {
  const StructureConstants &c = catalog_sc(AlgebraId::A56);
  Mat5 V = flag_frame(S, 2, 3);
  StructureConstants F = frame_tensor(V, c);
  const double ta = -sign_of(F.c[0][1][2]), tg = sign_of(F.c[0][2][3]);
  const double te = sign_of(F.c[0][3][4]), ts = sign_of(F.c[1][2][4]);
  const double s[5] = {1.0, tg * te * ts, ta * tg * te * ts, ta * te * ts,
                       ta * ts};
  for (int k = 0; k < N; ++k) V.col(k) *= s[k];
  F = frame_tensor(V, c);
  Coeffs co{{"alpha", F.c[0][1][2]}, {"beta", F.c[0][1][3]},
            {"tau", F.c[0][1][4]},   {"gamma", F.c[0][2][3]},
            {"delta", F.c[0][2][4]}, {"epsilon", F.c[0][3][4]},
            {"sigma", F.c[1][2][4]}};
  return {V, co};
}

inline std::pair<Mat5, Coeffs> build_A52(const Mat5 &S) {
  const StructureConstants &c = catalog_sc(AlgebraId::A52);
  Mat5 V = flag_frame(S, 2, 3);
  StructureConstants F = frame_tensor(V, c);
  const double ta = sign_of(F.c[0][1][2]);
  const double tg = sign_of(F.c[0][2][3]);
  const double td = sign_of(F.c[0][3][4]);
  const double s[5] = {1.0, 1.0, ta, tg * ta, td * tg * ta};
  for (int k = 0; k < N; ++k) V.col(k) *= s[k];
  F = frame_tensor(V, c);
  Coeffs co{{"alpha", F.c[0][1][2]}, {"beta", F.c[0][1][3]},
            {"tau1", F.c[0][1][4]},  {"gamma", F.c[0][2][3]},
            {"tau2", F.c[0][2][4]},  {"delta", F.c[0][3][4]}};
  return {V, co};
}

}  // namespace detail

struct MilnorFrame {
  AlgebraId id;
  Mat5 V;      // columns = frame vectors in reference-basis coordinates
  double eta;  // metric rescale of Theorem-type normalization: V^T (eta S) V = I
  Coeffs co;   // pattern coefficients (extended slots where needed)
};

inline MilnorFrame milnor_frame(AlgebraId id, const Mat5 &S) {
  require_spd(S);
  std::pair<Mat5, Coeffs> r;
  switch (id) {
    case AlgebraId::FiveA1: r = detail::build_5A1(S); break;
    case AlgebraId::A54: r = detail::build_A54(S); break;
    case AlgebraId::A31plus2A1: r = detail::build_A31(S); break;
    case AlgebraId::A41plusA1: r = detail::build_A41(S); break;
    case AlgebraId::A56: r = detail::build_A56(S); break;
    case AlgebraId::A55: r = detail::build_A55(S); break;
    case AlgebraId::A53: r = detail::build_A53(S); break;
    case AlgebraId::A51: r = detail::build_A51(S); break;
    case AlgebraId::A52: r = detail::build_A52(S); break;
  }
  // eta = 1/(v1^T S v1); rescaling V by 1/sqrt(eta) makes V^T (eta S) V = I,
  // and the bracket coefficients pick up the same factor
  const double n1 = sdot(S, Vec5(r.first.col(0)), Vec5(r.first.col(0)));
  const double eta = 1.0 / n1;
  const double cfac = std::sqrt(n1);
  r.first *= cfac;
  for (auto &[k, v] : r.second) v *= cfac;
  return MilnorFrame{id, r.first, eta, r.second};
}

}  // namespace nilricci
