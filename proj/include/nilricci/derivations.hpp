#pragma once
// Derivation algebras: the 50x25 linear system D[x,y] = [Dx,y] + [x,Dy] over
// basis pairs, its nullspace (the authoritative computation), and the
// parametric matrix displays of the classification lemma, with corrected
// entries where the printed displays fail the derivation property (see
// docs/ERRATA.md).

#include "core.hpp"
#include "linalg.hpp"

namespace nilricci {

// One row per (i<j, component k): 10*5 = 50 equations in the 25 unknowns
// D(k,m), flattened row-major (index k*5 + m).
inline Eigen::MatrixXd derivation_system(const StructureConstants &sc) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(50, 25);
  int r = 0;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      for (int k = 0; k < N; ++k, ++r)
        for (int m = 0; m < N; ++m) {
          A(r, k * 5 + m) += sc.c[i][j][m];   // D[e_i,e_j] component k
          A(r, m * 5 + i) -= sc.c[m][j][k];   // [D e_i, e_j]
          A(r, m * 5 + j) -= sc.c[i][m][k];   // [e_i, D e_j]
        }
  return A;
}

struct DerivationSpace {
  int dimension;
  std::vector<Mat5> basis;  // each normalized so the largest entry is +1
};

inline DerivationSpace derivation_space(const StructureConstants &sc,
                                        double tol = 1e-10) {
  Eigen::MatrixXd B = nullspace(derivation_system(sc), tol);
  DerivationSpace out{int(B.cols()), {}};
  for (int c = 0; c < B.cols(); ++c) {
    Mat5 D;
    for (int k = 0; k < N; ++k)
      for (int m = 0; m < N; ++m) D(k, m) = B(k * 5 + m, c);
    out.basis.push_back(D);
  }
  return out;
}

// worst-case defect of the Leibniz rule over basis pairs
inline double derivation_defect(const StructureConstants &sc, const Mat5 &D) {
  double worst = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Vec5 lhs = D * bracket(sc, Vec5::Unit(i), Vec5::Unit(j));
      Vec5 rhs = bracket(sc, Vec5(D.col(i)), Vec5::Unit(j)) +
                 bracket(sc, Vec5::Unit(i), Vec5(D.col(j)));
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  return worst;
}

inline bool is_derivation(const StructureConstants &sc, const Mat5 &D,
                          double tol = 1e-9) {
  return derivation_defect(sc, D) <= tol;
}

// ---- parametric displays ---------------------------------------------------

using Params = Coeffs;

// free entry names of the (corrected) parametric display, row-major order
inline const std::vector<std::string> &derivation_free_names(AlgebraId id) {
  static const std::map<AlgebraId, std::vector<std::string>> lut = [] {
    std::map<AlgebraId, std::vector<std::string>> m;
    std::vector<std::string> all;
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j)
        all.push_back("a" + std::to_string(i) + std::to_string(j));
    m[AlgebraId::FiveA1] = all;
    m[AlgebraId::A54] = {"a11", "a12", "a13", "a14", "a22", "a23", "a31",
                         "a32", "a41", "a43", "a44", "a51", "a52", "a53", "a54"};
    m[AlgebraId::A31plus2A1] = {"a11", "a12", "a21", "a22", "a31", "a32",
                                "a33", "a34", "a41", "a42", "a43", "a44",
                                "a51", "a52", "a53", "a54"};
    m[AlgebraId::A41plusA1] = {"a11", "a21", "a22", "a31", "a32", "a41",
                               "a42", "a44", "a51", "a52", "a54"};
    m[AlgebraId::A56] = {"a11", "a31", "a32", "a41", "a42", "a51", "a52", "a54"};
    m[AlgebraId::A55] = {"a11", "a12", "a22", "a31", "a32", "a41", "a42",
                         "a51", "a52", "a53"};  // a21 forced to 0 (corrected)
    m[AlgebraId::A53] = {"a11", "a12", "a21", "a22", "a31", "a32", "a41",
                         "a42", "a51", "a52"};
    m[AlgebraId::A51] = {"a11", "a21", "a22", "a23", "a31", "a32", "a33",
                         "a41", "a42", "a43", "a51", "a52", "a53"};
    m[AlgebraId::A52] = {"a11", "a21", "a22", "a31", "a41", "a42", "a43",
                         "a51", "a52"};
    return m;
  }();
  return lut.at(id);
}

// free-entry count of the display as printed in the classification lemma
// (A55 prints 11; the computed dimension is 10 — see docs/ERRATA.md)
inline int printed_derivation_free_count(AlgebraId id) {
  switch (id) {
    case AlgebraId::FiveA1: return 25;
    case AlgebraId::A54: return 15;
    case AlgebraId::A31plus2A1: return 16;
    case AlgebraId::A41plusA1: return 11;
    case AlgebraId::A56: return 8;
    case AlgebraId::A55: return 11;
    case AlgebraId::A53: return 10;
    case AlgebraId::A51: return 13;
    case AlgebraId::A52: return 9;
  }
  throw std::logic_error("unknown algebra id");
}

namespace detail {
inline double pget(const Params &p, const char *k) {
  auto it = p.find(k);
  return it == p.end() ? 0.0 : it->second;
}
}  // namespace detail

// Parametric derivation display (corrected).  Unknown parameter names are
// rejected; in particular "a21" is rejected for A55, where the printed
// display wrongly listed it as free.  `printed_variant` reproduces the
// displays exactly as printed (A55 with a21 free; A52 with (5,5)=a11+2a22);
// it exists so the errata can be demonstrated, not for production use.
inline Mat5 lemma_derivation(AlgebraId id, const Params &p,
                             bool printed_variant = false) {
  {
    auto names = derivation_free_names(id);
    if (printed_variant && id == AlgebraId::A55) names.push_back("a21");
    for (const auto &[k, v] : p) {
      (void)v;
      if (std::find(names.begin(), names.end(), k) == names.end())
        throw std::invalid_argument("unknown derivation display entry: " + k);
    }
  }
  auto g = [&p](const char *k) { return detail::pget(p, k); };
  Mat5 D = Mat5::Zero();
  switch (id) {
    case AlgebraId::FiveA1: {
      for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
          std::string k = "a" + std::to_string(i) + std::to_string(j);
          D(i - 1, j - 1) = detail::pget(p, k.c_str());
        }
      break;
    }
    case AlgebraId::A54: {
      const double a55 = g("a11") + g("a44");
      const double a33 = g("a11") + g("a44") - g("a22");  // a55 = a22 + a33
      D << g("a11"), g("a12"), g("a13"), g("a14"), 0,
          -g("a43"), g("a22"), g("a23"), g("a13"), 0,
          g("a31"), g("a32"), a33, -g("a12"), 0,
          g("a41"), g("a31"), g("a43"), g("a44"), 0,
          g("a51"), g("a52"), g("a53"), g("a54"), a55;
      break;
    }
    case AlgebraId::A31plus2A1:
      D << g("a11"), g("a12"), 0, 0, 0,
          g("a21"), g("a22"), 0, 0, 0,
          g("a31"), g("a32"), g("a33"), g("a34"), 0,
          g("a41"), g("a42"), g("a43"), g("a44"), 0,
          g("a51"), g("a52"), g("a53"), g("a54"), g("a11") + g("a22");
      break;
    case AlgebraId::A41plusA1:
      D << g("a11"), 0, 0, 0, 0,
          g("a21"), g("a22"), 0, 0, 0,
          g("a31"), g("a32"), g("a11") + g("a22"), 0, 0,
          g("a41"), g("a42"), 0, g("a44"), 0,
          g("a51"), g("a52"), g("a32"), g("a54"), 2 * g("a11") + g("a22");
      break;
    case AlgebraId::A56: {
      const double a21 = g("a54") + g("a32");
      const double a53 = g("a31") - g("a42");
      D << g("a11"), 0, 0, 0, 0,
          a21, 2 * g("a11"), 0, 0, 0,
          g("a31"), g("a32"), 3 * g("a11"), 0, 0,
          g("a41"), g("a42"), -g("a32"), 4 * g("a11"), 0,
          g("a51"), g("a52"), a53, g("a54"), 5 * g("a11");
      break;
    }
    case AlgebraId::A55: {
      const double a21 = printed_variant ? g("a21") : 0.0;
      const double a44 = g("a11") + g("a22");
      const double a55 = g("a11") + 2 * g("a22");
      const double a54 = g("a32") - g("a41");
      D << g("a11"), g("a12"), 0, 0, 0,
          a21, g("a22"), 0, 0, 0,
          g("a31"), g("a32"), 2 * g("a22"), 0, 0,
          g("a41"), g("a42"), -g("a12"), a44, 0,
          g("a51"), g("a52"), g("a53"), a54, a55;
      break;
    }
    case AlgebraId::A53:
      D << g("a11"), g("a12"), 0, 0, 0,
          g("a21"), g("a22"), 0, 0, 0,
          g("a31"), g("a32"), g("a11") + g("a22"), 0, 0,
          g("a41"), g("a42"), g("a32"), 2 * g("a11") + g("a22"), g("a12"),
          g("a51"), g("a52"), -g("a31"), g("a21"), g("a11") + 2 * g("a22");
      break;
    case AlgebraId::A51:
      D << g("a11"), 0, 0, 0, 0,
          g("a21"), g("a22"), g("a23"), 0, 0,
          g("a31"), g("a32"), g("a33"), 0, 0,
          g("a41"), g("a42"), g("a43"), g("a11") + g("a22"), g("a23"),
          g("a51"), g("a52"), g("a53"), g("a32"), g("a11") + g("a33");
      break;
    case AlgebraId::A52: {
      const double a55 =
          printed_variant ? g("a11") + 2 * g("a22") : 3 * g("a11") + g("a22");
      D << g("a11"), 0, 0, 0, 0,
          g("a21"), g("a22"), 0, 0, 0,
          g("a31"), g("a43"), g("a11") + g("a22"), 0, 0,
          g("a41"), g("a42"), g("a43"), 2 * g("a11") + g("a22"), 0,
          g("a51"), g("a52"), g("a42"), g("a43"), a55;
      break;
    }
  }
  return D;
}

}  // namespace nilricci
