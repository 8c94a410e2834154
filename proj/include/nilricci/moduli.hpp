#pragma once
// Moduli reduction: every invertible g is carried into the per-algebra
// representative family U_i by phi * g * q with phi a (scalar times an)
// automorphism and q orthogonal.  The representative h is assembled from the
// Milnor-frame coefficients by exact inversion formulas; phi = h V^T S and
// q = g^{-1} V then satisfy phi g q = h identically.  Three families need an
// extended support mask (see docs/ERRATA.md): their strict printed patterns
// are generically unreachable.

#include "core.hpp"
#include "frames.hpp"
#include "linalg.hpp"

#include <set>

namespace nilricci {

inline double automorphism_defect(const StructureConstants &sc, const Mat5 &phi) {
  double worst = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      Vec5 lhs = phi * bracket(sc, Vec5::Unit(i), Vec5::Unit(j));
      Vec5 rhs = bracket(sc, Vec5(phi.col(i)), Vec5(phi.col(j)));
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  return worst;
}

inline bool is_automorphism(const StructureConstants &sc, const Mat5 &phi,
                            double tol = 1e-8) {
  return automorphism_defect(sc, phi) <= tol;
}

using SupportMask = std::set<std::pair<int, int>>;  // 1-based (row, col), off-identity

// support of the representative family beyond the identity entries
inline const SupportMask &representative_support(AlgebraId id) {
  static const std::map<AlgebraId, SupportMask> lut = {
      {AlgebraId::FiveA1, {}},
      {AlgebraId::A54, {{2, 1}, {4, 4}, {5, 5}}},
      {AlgebraId::A31plus2A1, {{5, 5}}},
      {AlgebraId::A41plusA1, {{3, 3}, {4, 3}, {5, 3}, {5, 5}}},
      {AlgebraId::A56,
       {{2, 1}, {2, 2}, {3, 3}, {4, 3}, {4, 4}, {5, 5}, {5, 3}}},
      {AlgebraId::A55, {{3, 3}, {4, 3}, {4, 4}, {5, 4}, {5, 5}}},
      {AlgebraId::A53, {{2, 1}, {3, 3}, {4, 3}, {4, 4}, {5, 5}}},
      {AlgebraId::A51, {{4, 4}, {5, 4}, {5, 5}}},
      {AlgebraId::A52, {{3, 2}, {3, 3}, {4, 4}, {5, 5}, {4, 2}, {4, 3}}},
  };
  return lut.at(id);
}

// support of the family exactly as printed (strict); for A4,1+A1 the union of
// the two printed branches
inline const SupportMask &representative_support_strict(AlgebraId id) {
  static const std::map<AlgebraId, SupportMask> lut = [] {
    std::map<AlgebraId, SupportMask> m;
    for (AlgebraId id : kAllAlgebras) m[id] = representative_support(id);
    m[AlgebraId::A41plusA1] = {{3, 3}, {5, 3}, {5, 5}, {4, 3}};
    m[AlgebraId::A56].erase({5, 3});
    m[AlgebraId::A52].erase({4, 2});
    m[AlgebraId::A52].erase({4, 3});
    return m;
  }();
  return lut.at(id);
}

// diagonal entries the representative family requires to be positive (1-based)
inline const std::vector<int> &representative_positive_diagonal(AlgebraId id) {
  static const std::map<AlgebraId, std::vector<int>> lut = {
      {AlgebraId::FiveA1, {}},        {AlgebraId::A54, {4, 5}},
      {AlgebraId::A31plus2A1, {5}},   {AlgebraId::A41plusA1, {3, 5}},
      {AlgebraId::A56, {2, 3, 4, 5}}, {AlgebraId::A55, {3, 4, 5}},
      {AlgebraId::A53, {3, 4, 5}},    {AlgebraId::A51, {4, 5}},
      {AlgebraId::A52, {3, 4, 5}},
  };
  return lut.at(id);
}

// exact inversion: representative h whose columns h e_i bracket exactly like
// the frame vectors with the given pattern coefficients
inline Mat5 representative_from_coefficients(AlgebraId id, const Coeffs &co) {
  auto g = [&co](const char *k) { return coeff(co, k); };
  Mat5 h = Mat5::Identity();
  switch (id) {
    case AlgebraId::FiveA1:
      break;
    case AlgebraId::A54: {
      const double al = g("alpha"), be = g("beta"), ga = g("gamma");
      h(1, 0) = al / ga;
      h(3, 3) = be / ga;
      h(4, 4) = 1.0 / ga;
      break;
    }
    case AlgebraId::A31plus2A1:
      h(4, 4) = 1.0 / g("alpha");
      break;
    case AlgebraId::A41plusA1: {
      const double al = g("alpha"), be = g("beta"), ga = g("gamma"),
                   ta = g("tau");
      h(2, 2) = 1.0 / al;
      h(4, 4) = 1.0 / (al * be);
      h(3, 2) = -ga / al;
      h(4, 2) = -ta / (al * al * be);
      break;
    }
    case AlgebraId::A56: {
      const double al = g("alpha"), be = g("beta"), ga = g("gamma");
      const double de = g("delta"), ep = g("epsilon"), si = g("sigma"),
                   ta = g("tau");
      const double a55 = si / ((-al) * ga * ga * ep * ep);
      const double a44 = ep * a55;
      const double a33 = ga * ep * a55;
      const double a22 = -al * ga * ep * a55;
      const double a43 = be * a33 * a44 / a22;
      const double a21 = (de * a55 - a43) / a33;
      const double a53 = ta * a33 * a55 / a22;
      h(1, 0) = a21;
      h(1, 1) = a22;
      h(2, 2) = a33;
      h(3, 2) = a43;
      h(3, 3) = a44;
      h(4, 4) = a55;
      h(4, 2) = a53;
      break;
    }
    case AlgebraId::A55: {
      const double al = g("alpha"), be = g("beta"), ga = g("gamma");
      const double de = g("delta"), ep = g("epsilon");
      h(3, 3) = 1.0 / al;
      h(4, 4) = 1.0 / (al * ep);
      h(2, 2) = ga / (al * ep);
      h(3, 2) = de / (al * ep);
      h(4, 3) = -be / (al * al * ep);
      break;
    }
    case AlgebraId::A53: {
      const double al = g("alpha"), be = g("beta"), ga = g("gamma");
      const double de = g("delta"), ep = g("epsilon");
      h(2, 2) = 1.0 / al;
      h(3, 3) = 1.0 / (al * ga);
      h(3, 2) = -be / (al * al * ga);
      h(4, 4) = 1.0 / (al * ep);
      h(1, 0) = de / ep;
      break;
    }
    case AlgebraId::A51: {
      const double al = g("alpha"), be = g("beta"), ga = g("gamma");
      h(3, 3) = 1.0 / al;
      h(4, 4) = 1.0 / ga;
      h(4, 3) = -be / (al * ga);
      break;
    }
    case AlgebraId::A52: {
      const double al = g("alpha"), be = g("beta"), ga = g("gamma");
      const double de = g("delta"), t1 = g("tau1"), t2 = g("tau2");
      h(2, 2) = 1.0 / al;             // a33
      h(3, 3) = 1.0 / (al * ga);      // a44
      h(4, 4) = 1.0 / (al * ga * de); // a55
      const double a43 = t2 * h(4, 4);
      h(3, 2) = a43;
      h(2, 1) = be * h(3, 3) + a43 / h(2, 2);  // a32 = beta a44 + a43/a33
      h(3, 1) = t1 * h(4, 4);                  // a42
      break;
    }
  }
  return h;
}

struct Representative {
  AlgebraId id;
  Mat5 matrix;
  Coeffs entries;  // named off-identity entries "a{row}{col}", 1-based
  int branch;      // A4,1+A1: 1 or 2 (split on the (4,3) entry); else 0
};

inline Representative make_representative(AlgebraId id, const Coeffs &co) {
  Representative rep{id, representative_from_coefficients(id, co), {}, 0};
  for (const auto &[r, c] : representative_support(id))
    rep.entries["a" + std::to_string(r) + std::to_string(c)] =
        rep.matrix(r - 1, c - 1);
  if (id == AlgebraId::A41plusA1)
    rep.branch = std::abs(rep.matrix(3, 2)) <= 1e-10 ? 1 : 2;
  return rep;
}

struct Reduction {
  Mat5 phi;  // scalar times automorphism (here: scalar factor exactly 1)
  Mat5 q;    // orthogonal
  Representative rep;
  // diagnostics
  double automorphism_defect;   // Leibniz-square defect of phi
  double q_orthogonality;       // ||q^T q - I||_inf
  double identity_residual;     // ||phi g q - rep.matrix||_inf
  double pattern_residual;      // representative mass outside the support mask
};

// reduce g: with S = g^{-T} g^{-1} the Milnor frame V of S is mapped onto the
// representative basis by phi = h V^T S; q = g^{-1} V is orthogonal and
// phi g q = h holds by construction.
inline Reduction reduce(AlgebraId id, const Mat5 &g) {
  if (std::abs(g.determinant()) <= 1e-12)
    throw std::invalid_argument("reduce: matrix is singular");
  Mat5 Sinv = g * g.transpose();
  Mat5 S = Sinv.partialPivLu().solve(Mat5::Identity());
  S = 0.5 * (S + Mat5(S.transpose()));
  const MilnorFrame mf = milnor_frame(id, S);
  Reduction out{Mat5::Zero(), Mat5::Zero(), make_representative(id, mf.co),
                0, 0, 0, 0};
  out.phi = out.rep.matrix * mf.V.transpose() * S;
  out.q = g.partialPivLu().solve(mf.V);
  out.automorphism_defect = nilricci::automorphism_defect(catalog_sc(id), out.phi);
  out.q_orthogonality =
      (out.q.transpose() * out.q - Mat5::Identity()).cwiseAbs().maxCoeff();
  out.identity_residual =
      (out.phi * g * out.q - out.rep.matrix).cwiseAbs().maxCoeff();
  const Mat5 dh = out.rep.matrix - Mat5::Identity();
  const auto &mask = representative_support(id);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c)
      if (!mask.count({r + 1, c + 1}))
        out.pattern_residual = std::max(out.pattern_residual, std::abs(dh(r, c)));
  if (out.pattern_residual > 1e-8)
    throw std::runtime_error(
        "reduce: representative leaves its support pattern, residual " +
        std::to_string(out.pattern_residual));
  return out;
}

}  // namespace nilricci
