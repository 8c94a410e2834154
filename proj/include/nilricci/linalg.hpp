#pragma once
// Small dense linear-algebra utilities: LQ decomposition with positive
// diagonal, a deterministic rank-revealing nullspace, Gram-matrix helpers and
// S-inner-product primitives used by the frame constructions.

#include "core.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>

namespace nilricci {

struct LQ {
  Mat5 L;  // lower triangular, positive diagonal
  Mat5 Q;  // orthogonal; g * Q = L
};

// g = L * Q^T with Q returned so that g * Q = L.  Computed from the
// Householder QR of g^T with the diagonal sign fixed to +.
inline LQ lq_decompose(const Mat5 &g) {
  Eigen::HouseholderQR<Mat5> qr(g.transpose());
  Mat5 Q = qr.householderQ();
  Mat5 R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < N; ++i) {
    if (R(i, i) < 0) {
      R.row(i) = -R.row(i);
      Q.col(i) = -Q.col(i);
    }
  }
  return LQ{R.transpose(), Q};
}

// Nullspace basis of A via Gauss-Jordan elimination with pivoting over the
// remaining submatrix.  Pivot threshold is `tol` relative to max(1, |A|_max).
// Basis vectors (one per free column, ascending) are normalized so their
// largest-magnitude entry equals +1; the scan takes the first maximum, which
// makes the output deterministic.
inline Eigen::MatrixXd nullspace(const Eigen::MatrixXd &A, double tol = 1e-10) {
  Eigen::MatrixXd R = A;
  const int m = int(R.rows()), n = int(R.cols());
  const double scale = std::max(1.0, R.cwiseAbs().maxCoeff());
  std::vector<int> pivcol;                 // pivot column per elimination step
  std::vector<bool> is_piv(size_t(n), false);
  int step = 0;
  while (step < m) {
    int br = -1, bc = -1;
    double best = 0.0;
    for (int c = 0; c < n; ++c) {
      if (is_piv[size_t(c)]) continue;
      for (int r = step; r < m; ++r)
        if (std::abs(R(r, c)) > best) {
          best = std::abs(R(r, c));
          br = r;
          bc = c;
        }
    }
    if (best <= tol * scale) break;
    R.row(step).swap(R.row(br));
    const double piv = R(step, bc);
    for (int r = 0; r < m; ++r) {
      if (r == step || R(r, bc) == 0.0) continue;
      const double f = R(r, bc) / piv;
      R.row(r) -= f * R.row(step);
      R(r, bc) = 0.0;
    }
    pivcol.push_back(bc);
    is_piv[size_t(bc)] = true;
    ++step;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_piv[size_t(c)]) free_cols.push_back(c);
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, Eigen::Index(free_cols.size()));
  for (size_t a = 0; a < free_cols.size(); ++a) {
    const int f = free_cols[a];
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    x[f] = 1.0;
    for (size_t s = 0; s < pivcol.size(); ++s)
      x[pivcol[s]] = -R(Eigen::Index(s), f) / R(Eigen::Index(s), pivcol[s]);
    int arg = 0;
    for (int k = 1; k < n; ++k)
      if (std::abs(x[k]) > std::abs(x[arg])) arg = k;
    B.col(Eigen::Index(a)) = x / x[arg];
  }
  return B;
}

inline bool is_symmetric(const Mat5 &S, double tol = 1e-12) {
  return (S - S.transpose()).cwiseAbs().maxCoeff() <= tol;
}

// validate a Gram matrix: symmetric within 1e-12 and positive definite
inline void require_spd(const Mat5 &S) {
  if (!is_symmetric(S))
    throw std::invalid_argument("inner product matrix is not symmetric");
  Eigen::LLT<Mat5> llt(S);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("inner product matrix is not positive definite");
}

// group element representing the metric with Gram matrix S: with S = L L^T
// (Cholesky), g = L^{-T} satisfies g^{-T} g^{-1} = S.
inline Mat5 gram_to_gl(const Mat5 &S) {
  require_spd(S);
  Mat5 L = Eigen::LLT<Mat5>(S).matrixL();
  return L.transpose()
      .triangularView<Eigen::Upper>()
      .solve(Mat5::Identity());
}

// ---- S-inner-product primitives -------------------------------------------

inline double sdot(const Mat5 &S, const Vec5 &x, const Vec5 &y) {
  return x.dot(S * y);
}

inline double snorm(const Mat5 &S, const Vec5 &x) {
  return std::sqrt(sdot(S, x, x));
}

inline Vec5 unit_s(const Mat5 &S, const Vec5 &x) {
  const double n = snorm(S, x);
  if (!(n > 1e-12))
    throw std::runtime_error("cannot normalize a (near-)null vector");
  return x / n;
}

// Gram-Schmidt in the S-inner product; input vectors must be in general
// position (the constructions only feed it generic data).
inline std::vector<Vec5> gram_schmidt_s(const Mat5 &S,
                                        const std::vector<Vec5> &vs) {
  std::vector<Vec5> out;
  for (Vec5 v : vs) {
    for (const Vec5 &w : out) v -= sdot(S, w, v) * w;
    out.push_back(unit_s(S, v));
  }
  return out;
}

// S-orthogonal lift of the coordinate subspace spanned by {e_i : i in I}
// across the complement J: each e_i gains the correction -S_JJ^{-1} S_JI.
inline std::vector<Vec5> s_section(const Mat5 &S, const std::vector<int> &I,
                                   const std::vector<int> &J) {
  const int ni = int(I.size()), nj = int(J.size());
  Eigen::MatrixXd SJJ(nj, nj), SJI(nj, ni);
  for (int a = 0; a < nj; ++a) {
    for (int b = 0; b < nj; ++b) SJJ(a, b) = S(J[size_t(a)], J[size_t(b)]);
    for (int b = 0; b < ni; ++b) SJI(a, b) = S(J[size_t(a)], I[size_t(b)]);
  }
  Eigen::MatrixXd X = -SJJ.partialPivLu().solve(SJI);
  std::vector<Vec5> out;
  for (int b = 0; b < ni; ++b) {
    Vec5 v = Vec5::Unit(I[size_t(b)]);
    for (int a = 0; a < nj; ++a) v[J[size_t(a)]] += X(a, b);
    out.push_back(v);
  }
  return out;
}

}  // namespace nilricci
