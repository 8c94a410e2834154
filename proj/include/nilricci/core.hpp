#pragma once
// Fixed-dimension (n = 5) Lie-algebra arithmetic and the catalog of the nine
// 5-dimensional nilpotent Lie algebras.  Basis e1..e5 is indexed 0..4
// internally; all user-facing labels are 1-based.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilricci {

inline constexpr int N = 5;
using Mat5 = Eigen::Matrix<double, 5, 5>;
using Vec5 = Eigen::Matrix<double, 5, 1>;

// named scalar bag used for frame coefficients and display parameters
// (std::map so iteration order, and hence all output, is deterministic)
using Coeffs = std::map<std::string, double>;

inline double coeff(const Coeffs &co, const std::string &k) {
  auto it = co.find(k);
  return it == co.end() ? 0.0 : it->second;
}

// c[i][j][k] = coefficient of e_k in [e_i, e_j]; antisymmetric in (i, j).
struct StructureConstants {
  std::array<std::array<std::array<double, 5>, 5>, 5> c{};

  double &at(int i, int j, int k) { return c[i][j][k]; }
  double at(int i, int j, int k) const { return c[i][j][k]; }

  // set [e_i, e_j] = v e_k (1-based labels) and the antisymmetric mirror
  void put1(int i, int j, int k, double v) {
    c[i - 1][j - 1][k - 1] += v;
    c[j - 1][i - 1][k - 1] -= v;
  }

  double antisymmetry_defect() const {
    double worst = 0.0;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k)
          worst = std::max(worst, std::abs(c[i][j][k] + c[j][i][k]));
    return worst;
  }
};

inline Vec5 bracket(const StructureConstants &sc, const Vec5 &x, const Vec5 &y) {
  Vec5 out = Vec5::Zero();
  for (int i = 0; i < N; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < N; ++j) {
      if (y[j] == 0.0) continue;
      for (int k = 0; k < N; ++k) out[k] += sc.c[i][j][k] * x[i] * y[j];
    }
  }
  return out;
}

// matrix of ad_u: column j = [u, e_j]
inline Mat5 ad(const StructureConstants &sc, const Vec5 &u) {
  Mat5 m = Mat5::Zero();
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i)
      if (u[i] != 0.0)
        for (int k = 0; k < N; ++k) m(k, j) += sc.c[i][j][k] * u[i];
  return m;
}

// max over basis triples of |[[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]|
inline double jacobi_defect(const StructureConstants &sc) {
  double worst = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
          double s = 0.0;
          for (int m = 0; m < N; ++m)
            s += sc.c[i][j][m] * sc.c[m][k][l] + sc.c[j][k][m] * sc.c[m][i][l] +
                 sc.c[k][i][m] * sc.c[m][j][l];
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

// dims of g >= [g,g] >= [g,[g,g]] >= ... until stabilization (0 iff nilpotent)
inline std::vector<int> lower_central_series(const StructureConstants &sc,
                                             double tol = 1e-10) {
  std::vector<int> dims{N};
  Eigen::MatrixXd cur = Eigen::MatrixXd::Identity(N, N);
  for (;;) {
    Eigen::MatrixXd span(N, N * cur.cols());
    int col = 0;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < cur.cols(); ++j)
        span.col(col++) = bracket(sc, Vec5::Unit(i), Vec5(cur.col(j)));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(span, Eigen::ComputeThinU);
    const auto &sv = svd.singularValues();
    int r = 0;
    if (sv.size() > 0 && sv[0] > 0)
      for (int k = 0; k < sv.size(); ++k)
        if (sv[k] > tol * sv[0]) ++r;
    dims.push_back(r);
    if (r == 0 || r == dims[dims.size() - 2]) break;  // stabilized
    cur = svd.matrixU().leftCols(r);
  }
  return dims;
}

enum class AlgebraId { FiveA1, A54, A31plus2A1, A41plusA1, A56, A55, A53, A51, A52 };

inline const std::array<AlgebraId, 9> kAllAlgebras{
    AlgebraId::FiveA1, AlgebraId::A54, AlgebraId::A31plus2A1,
    AlgebraId::A41plusA1, AlgebraId::A56, AlgebraId::A55,
    AlgebraId::A53, AlgebraId::A51, AlgebraId::A52};

struct CatalogEntry {
  AlgebraId id;
  std::string slug;      // canonical machine id, e.g. "A31+2A1"
  std::string name;      // display name, e.g. "A3,1+2A1"
  std::string brackets;  // human-readable nonzero commutation relations
  StructureConstants sc;
};

inline const std::vector<CatalogEntry> &catalog() {
  static const std::vector<CatalogEntry> table = [] {
    std::vector<CatalogEntry> t;
    auto add = [&t](AlgebraId id, std::string slug, std::string name,
                    std::string br,
                    std::vector<std::array<double, 4>> entries) {
      CatalogEntry e{id, std::move(slug), std::move(name), std::move(br), {}};
      for (auto &[i, j, k, v] : entries)
        e.sc.put1(int(i), int(j), int(k), v);
      t.push_back(std::move(e));
    };
    add(AlgebraId::FiveA1, "5A1", "5A1", "none", {});
    add(AlgebraId::A54, "A54", "A5,4", "[e1,e4]=e5, [e2,e3]=e5",
        {{1, 4, 5, 1}, {2, 3, 5, 1}});
    add(AlgebraId::A31plus2A1, "A31+2A1", "A3,1+2A1", "[e1,e2]=e5",
        {{1, 2, 5, 1}});
    add(AlgebraId::A41plusA1, "A41+A1", "A4,1+A1", "[e1,e2]=e3, [e1,e3]=e5",
        {{1, 2, 3, 1}, {1, 3, 5, 1}});
    add(AlgebraId::A56, "A56", "A5,6",
        "[e1,e2]=-e3, [e1,e3]=e4, [e1,e4]=e5, [e2,e3]=e5",
        {{1, 2, 3, -1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {2, 3, 5, 1}});
    add(AlgebraId::A55, "A55", "A5,5", "[e1,e2]=e4, [e1,e3]=e5, [e2,e4]=e5",
        {{1, 2, 4, 1}, {1, 3, 5, 1}, {2, 4, 5, 1}});
    add(AlgebraId::A53, "A53", "A5,3", "[e1,e2]=e3, [e1,e3]=e4, [e2,e3]=e5",
        {{1, 2, 3, 1}, {1, 3, 4, 1}, {2, 3, 5, 1}});
    add(AlgebraId::A51, "A51", "A5,1", "[e1,e2]=e4, [e1,e3]=e5",
        {{1, 2, 4, 1}, {1, 3, 5, 1}});
    add(AlgebraId::A52, "A52", "A5,2", "[e1,e2]=e3, [e1,e3]=e4, [e1,e4]=e5",
        {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}});
    return t;
  }();
  return table;
}

inline const CatalogEntry &entry(AlgebraId id) {
  for (const auto &e : catalog())
    if (e.id == id) return e;
  throw std::logic_error("unknown algebra id");
}

inline const StructureConstants &catalog_sc(AlgebraId id) { return entry(id).sc; }
inline const std::string &slug(AlgebraId id) { return entry(id).slug; }

// Accepts both table names ("A5,4", "A3,1+2A1") and slug forms ("A54",
// "A31+2A1", "A31plus2A1"); case-insensitive, spaces/commas/underscores ignored.
inline std::optional<AlgebraId> parse_algebra_id(const std::string &raw) {
  std::string s;
  for (char ch : raw) {
    if (ch == ' ' || ch == ',' || ch == '_') continue;
    s += char(std::toupper(static_cast<unsigned char>(ch)));
  }
  // normalize the word "PLUS" to '+'
  for (std::string::size_type p; (p = s.find("PLUS")) != std::string::npos;)
    s.replace(p, 4, "+");
  static const std::map<std::string, AlgebraId> lut = {
      {"5A1", AlgebraId::FiveA1},     {"FIVEA1", AlgebraId::FiveA1},
      {"A54", AlgebraId::A54},
      {"A31+2A1", AlgebraId::A31plus2A1}, {"A31P2A1", AlgebraId::A31plus2A1},
      {"A41+A1", AlgebraId::A41plusA1},   {"A41PA1", AlgebraId::A41plusA1},
      {"A56", AlgebraId::A56},        {"A55", AlgebraId::A55},
      {"A53", AlgebraId::A53},        {"A51", AlgebraId::A51},
      {"A52", AlgebraId::A52}};
  auto it = lut.find(s);
  if (it == lut.end()) return std::nullopt;
  return it->second;
}

}  // namespace nilricci
