#pragma once
// Prescribed-Ricci solvers: given a symmetric T in the Milnor-frame sparsity
// pattern of an algebra and a parameter t, decide whether Ric(g) = t^2 T has
// a solution among the pattern metrics, and produce the coefficients when it
// does.  The per-algebra condition lists are the corrected ones (several
// printed conditions are wrong or missing; each deviation is demonstrated by
// a counterexample in the tests and catalogued in docs/ERRATA.md).
//
// Solver strategy: gate on the sparsity pattern and the condition list,
// recover squared coefficients from the linear letter combinations (clamping
// tiny negatives), pin signs from couplings, enumerate at most four sign
// choices, and accept the first candidate whose Ricci reproduces t^2 T.

#include "core.hpp"
#include "frames.hpp"
#include "ricci.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace nilricci {

inline constexpr double kEq = 1e-9;      // equality tolerance
inline constexpr double kStrict = 1e-10; // strict-inequality margin
inline constexpr double kClamp = 1e-10;  // negative-square clamp
inline constexpr double kResid = 1e-8;   // Ricci reconstruction residual

// allowed nonzero positions of T, 0-based upper triangle (i <= j)
inline const std::set<std::pair<int, int>> &prescribed_pattern(AlgebraId id) {
  static const std::map<AlgebraId, std::set<std::pair<int, int>>> lut = [] {
    std::set<std::pair<int, int>> diag;
    for (int i = 0; i < N; ++i) diag.insert({i, i});
    auto with = [&diag](std::set<std::pair<int, int>> extra) {
      extra.insert(diag.begin(), diag.end());
      return extra;
    };
    std::map<AlgebraId, std::set<std::pair<int, int>>> m;
    m[AlgebraId::FiveA1] = {};
    m[AlgebraId::A54] = with({{0, 1}, {2, 3}});
    m[AlgebraId::A31plus2A1] = {{0, 0}, {1, 1}, {4, 4}};
    m[AlgebraId::A41plusA1] = with({{1, 2}, {2, 4}, {2, 3}});
    m[AlgebraId::A56] = with({{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    m[AlgebraId::A55] = with({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 4}});
    m[AlgebraId::A53] = with({{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    m[AlgebraId::A51] = with({{1, 2}, {3, 4}});
    m[AlgebraId::A52] = with({{1, 2}, {2, 3}});
    return m;
  }();
  return lut.at(id);
}

// theorem letter names for the pattern entries, in report order
inline const std::vector<std::pair<std::string, std::pair<int, int>>> &
prescribed_entry_names(AlgebraId id) {
  static const std::map<AlgebraId,
                        std::vector<std::pair<std::string, std::pair<int, int>>>>
      lut = [] {
        using E = std::pair<std::string, std::pair<int, int>>;
        auto diag = [](int n) {
          const char *l[] = {"a", "b", "c", "d", "e"};
          std::vector<E> v;
          for (int i = 0; i < n; ++i) v.push_back({l[i], {i, i}});
          return v;
        };
        std::map<AlgebraId, std::vector<E>> m;
        m[AlgebraId::FiveA1] = {};
        m[AlgebraId::A54] = diag(5);
        m[AlgebraId::A54].push_back({"f", {0, 1}});
        m[AlgebraId::A54].push_back({"l", {2, 3}});
        m[AlgebraId::A31plus2A1] = {{"a", {0, 0}}, {"b", {1, 1}}, {"c", {4, 4}}};
        m[AlgebraId::A41plusA1] = diag(5);
        m[AlgebraId::A41plusA1].push_back({"f", {1, 2}});
        m[AlgebraId::A41plusA1].push_back({"h", {2, 3}});
        m[AlgebraId::A41plusA1].push_back({"l", {2, 4}});
        m[AlgebraId::A56] = diag(5);
        for (auto e : std::vector<E>{{"f", {0, 1}}, {"l", {1, 2}}, {"h", {2, 3}}, {"i", {3, 4}}})
          m[AlgebraId::A56].push_back(e);
        m[AlgebraId::A55] = diag(5);
        for (auto e : std::vector<E>{{"f", {0, 1}}, {"l", {0, 2}}, {"h", {0, 3}},
                                     {"i", {1, 2}}, {"j", {2, 3}}, {"k", {3, 4}}})
          m[AlgebraId::A55].push_back(e);
        m[AlgebraId::A53] = diag(5);
        for (auto e : std::vector<E>{{"f", {0, 1}}, {"l", {1, 2}}, {"h", {2, 3}}, {"i", {3, 4}}})
          m[AlgebraId::A53].push_back(e);
        m[AlgebraId::A51] = diag(5);
        m[AlgebraId::A51].push_back({"f", {1, 2}});
        m[AlgebraId::A51].push_back({"l", {3, 4}});
        m[AlgebraId::A52] = diag(5);
        m[AlgebraId::A52].push_back({"f", {1, 2}});
        m[AlgebraId::A52].push_back({"l", {2, 3}});
        return m;
      }();
  return lut.at(id);
}

inline double off_pattern_max(AlgebraId id, const Mat5 &T) {
  const auto &pat = prescribed_pattern(id);
  double m = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j)
      if (!pat.count({i, j})) m = std::max(m, std::abs(T(i, j)));
  return m;
}

struct Condition {
  std::string name;
  bool satisfied;
  double residual;  // |defect| for equalities, the margin value for inequalities
};

struct ConditionReport {
  std::vector<Condition> items;
  Coeffs derived;    // theorem letter combinations evaluated on T
  double off_pattern;
  int branch;        // A4,1+A1 report branch (1/2), 0 otherwise
  bool all_satisfied() const {
    for (const auto &c : items)
      if (!c.satisfied) return false;
    return true;
  }
};

namespace detail {

struct CondList {
  std::vector<Condition> &out;
  void eq(const std::string &n, double v) { out.push_back({n, std::abs(v) <= kEq, std::abs(v)}); }
  void sq(const std::string &n, double x, double target) { eq(n, x * x - target); }
  void gt0(const std::string &n, double v) { out.push_back({n, v > kStrict, v}); }
  void lt0(const std::string &n, double v) { out.push_back({n, v < -kStrict, v}); }
  void ge0(const std::string &n, double v) { out.push_back({n, v >= -kStrict, v}); }
  void le0(const std::string &n, double v) { out.push_back({n, v <= kStrict, v}); }
};

}  // namespace detail

// condition list for the A4,1+A1 branch `cs` (1 or 2); T includes the t^2 factor
inline ConditionReport check_conditions_a41(const Mat5 &T, int cs) {
  ConditionReport rep;
  rep.off_pattern = off_pattern_max(AlgebraId::A41plusA1, T);
  rep.branch = cs;
  detail::CondList L{rep.items};
  const double a = T(0, 0), b = T(1, 1), c = T(2, 2);
  if (cs == 1) {
    const double d = T(4, 4), e = T(1, 2), f = T(2, 4);
    const double Au = a - 2 * b - c, Bu = b - a, Cu = a + d;
    L.eq("case1: T44 = 0", T(3, 3));
    L.eq("case1: T34 = 0", T(2, 3));
    L.eq("b+c+d = 0", b + c + d);
    L.ge0("A = a-2b-c >= 0", Au);
    L.gt0("B = b-a > 0", Bu);
    L.lt0("C = a+d < 0", Cu);
    L.sq("e^2 = AB", e, Au * Bu);
    L.sq("f^2 = -AC", f, -Au * Cu);
    L.le0("e f <= 0", e * f);
    rep.derived = {{"A", Au}, {"B", Bu}, {"C", Cu}};
  } else {
    const double d = T(3, 3), e = T(4, 4), f = T(2, 3);
    L.eq("case2: T23 = 0", T(1, 2));
    L.eq("case2: T35 = 0", T(2, 4));
    L.eq("2b+c+d-a = 0", 2 * b + c + d - a);  // printed: 2b-c-a+d (ERRATA)
    L.eq("a-b+e = 0", a - b + e);
    L.ge0("d >= 0", d);
    L.gt0("e > 0", e);
    L.lt0("b+d < 0", b + d);
    L.sq("f^2 = -d(b+d)", f, -d * (b + d));
  }
  return rep;
}

// corrected condition list; for A4,1+A1 reports the better branch
inline ConditionReport check_conditions(AlgebraId id, const Mat5 &T) {
  if (id == AlgebraId::A41plusA1) {
    ConditionReport r1 = check_conditions_a41(T, 1);
    ConditionReport r2 = check_conditions_a41(T, 2);
    return (r1.all_satisfied() || !r2.all_satisfied()) ? r1 : r2;
  }
  ConditionReport rep;
  rep.off_pattern = off_pattern_max(id, T);
  rep.branch = 0;
  detail::CondList L{rep.items};
  const double a = T(0, 0), b = T(1, 1), c = T(2, 2), d = T(3, 3), e = T(4, 4);
  switch (id) {
    case AlgebraId::FiveA1: {
      rep.items.push_back(
          {"T = 0", T.cwiseAbs().maxCoeff() <= 1e-10, T.cwiseAbs().maxCoeff()});
      break;
    }
    case AlgebraId::A54: {
      const double f = T(0, 1), l = T(2, 3);
      L.eq("c+d+e = 0", c + d + e);  // missing from the printed list (ERRATA)
      L.eq("a+b+e = 0", a + b + e);
      L.lt0("b < 0", b);
      L.lt0("d < 0", d);
      L.ge0("b-c >= 0", b - c);
      L.sq("f^2 = -b(b-c)", f, -b * (b - c));
      L.sq("l^2 = -d(b-c)", l, -d * (b - c));
      L.ge0("f l >= 0", f * l);  // missing from the printed list (ERRATA)
      rep.derived = {{"alpha^2", 2 * (b - c)}, {"beta^2", -2 * d}, {"gamma^2", -2 * b}};
      break;
    }
    case AlgebraId::A31plus2A1: {
      L.eq("a = b", a - b);
      L.eq("a = -c", a + T(4, 4));
      L.lt0("a < 0", a);
      rep.derived = {{"alpha^2", -2 * a}};
      break;
    }
    case AlgebraId::A56: {
      const double f = T(0, 1), g = T(1, 2), h = T(2, 3), i = T(3, 4);
      const double s2 = -2 * (b + c + d + e);
      const double g2 = -2 * (a + b + 2 * c + 2 * d + 3 * e);
      rep.derived = {{"sigma^2", s2}, {"gamma^2", g2}};
      L.gt0("sigma^2 = -2(b+c+d+e) > 0", s2);  // printed (1) b+c+d+e=0 is vacuous (ERRATA)
      L.gt0("gamma^2 = -2(a+b+2c+2d+3e) > 0", g2);
      if (s2 > kStrict && g2 > kStrict) {
        const double d2 = 4 * f * f / s2;
        double b2 = 2 * (b + c + 2 * d + 2 * e) - g2 - d2;
        rep.items.push_back({"f^2 g^2 = i^2 s^2",
                             std::abs(f * f * g2 - i * i * s2) <=
                                 kEq * std::max({1.0, s2, g2}),
                             std::abs(f * f * g2 - i * i * s2)});
        rep.items.push_back({"beta^2 >= 0", b2 >= -kClamp, b2});
        b2 = std::max(b2, 0.0);
        const double a2 = 2 * (c + d + e) - b2;
        L.gt0("alpha^2 > 0", a2);
        const double e2 = -2 * d + b2 + g2;
        L.gt0("epsilon^2 > 0", e2);
        L.sq("g^2 = beta^2 gamma^2 / 4", g, b2 * g2 / 4);
        L.le0("f i <= 0", f * i);
        rep.derived["delta^2"] = d2;
        rep.derived["beta^2"] = b2;
        rep.derived["alpha^2"] = a2;
        rep.derived["epsilon^2"] = e2;
        if (a2 > kStrict && e2 > kStrict) {
          const double al = -std::sqrt(a2);
          const double be =
              std::sqrt(b2) * (std::abs(g) > kEq ? -detail::sign_of(g) : 1.0);
          const double de =
              std::sqrt(std::max(d2, 0.0)) * (std::abs(f) > kEq ? -detail::sign_of(f) : 1.0);
          const double ep = std::sqrt(e2);
          const double hh = (al * be - de * ep) / 2;
          const bool both_free = std::abs(g) <= kEq && std::abs(f) <= kEq;
          const double r =
              both_free ? std::min(std::abs(h - hh), std::abs(h + hh)) : std::abs(h - hh);
          rep.items.push_back({"h = (alpha beta - delta eps)/2", r <= kEq, r});
        }
      }
      break;
    }
    case AlgebraId::A55: {
      const double f = T(0, 1), l = T(0, 2), h = T(0, 3);
      const double i = T(1, 2), j = T(2, 3), k = T(3, 4);
      const double Al = -(a + b + c + 2 * d + 2 * e);
      const double Bl = a + d + e;
      const double Cl = -(a + c + d + e);
      const double Dl = a + b + 2 * c + 2 * d + 3 * e;  // printed D is wrong (ERRATA)
      const double El = -(a + b + c + d + 2 * e);       // printed E is wrong (ERRATA)
      L.gt0("A = -(a+b+c+2d+2e) > 0", Al);
      L.ge0("B = a+d+e >= 0", Bl);
      L.gt0("C = -(a+c+d+e) > 0", Cl);
      L.ge0("D = a+b+2c+2d+3e >= 0", Dl);
      L.gt0("E = -(a+b+c+d+2e) > 0", El);
      L.sq("f^2 = BC", f, Bl * Cl);
      L.sq("l^2 = BD", l, Bl * Dl);
      L.sq("h^2 = AD", h, Al * Dl);
      L.sq("i^2 = DC", i, Dl * Cl);
      L.sq("j^2 = AB", j, Al * Bl);
      L.sq("k^2 = DE", k, Dl * El);
      L.ge0("f j >= 0", f * j);
      L.ge0("h k >= 0", h * k);
      L.le0("h i <= 0", h * i);
      L.le0("l h f <= 0", l * h * f);
      rep.derived = {{"A", Al}, {"B", Bl}, {"C", Cl}, {"D", Dl}, {"E", El}};
      break;
    }
    case AlgebraId::A53: {
      const double f = T(0, 1), l = T(1, 2), h = T(2, 3), i = T(3, 4);
      const double Al = -(b + c + d + e);
      const double Bl = b + c + d + 2 * e;
      const double Cl = -(a + b + 2 * c + 2 * d + 3 * e);
      const double Dl = a + b + 2 * c + 3 * d + 3 * e;
      const double El = -(a + b + c + 2 * d + 2 * e);
      L.gt0("A = -(b+c+d+e) > 0", Al);
      L.ge0("B = b+c+d+2e >= 0", Bl);
      L.gt0("C = -(a+b+2c+2d+3e) > 0", Cl);
      L.ge0("D = a+b+2c+3d+3e >= 0", Dl);
      L.gt0("E = -(a+b+c+2d+2e) > 0", El);
      L.sq("f^2 = AB", f, Al * Bl);
      L.sq("l^2 = CD", l, Cl * Dl);  // printed l^2 = BD is wrong (ERRATA)
      L.sq("h^2 = DE", h, Dl * El);
      L.sq("i^2 = BC", i, Bl * Cl);
      L.le0("l h <= 0", l * h);  // missing from the printed list (ERRATA)
      L.le0("f i <= 0", f * i);  // missing from the printed list (ERRATA)
      rep.derived = {{"A", Al}, {"B", Bl}, {"C", Cl}, {"D", Dl}, {"E", El}};
      break;
    }
    case AlgebraId::A51: {
      const double f = T(1, 2), l = T(3, 4);
      L.eq("a-b-c = 0", a - b - c);  // printed: a+b+c = 0 (ERRATA)
      L.eq("b+c+d+e = 0", b + c + d + e);  // missing from the printed list (ERRATA)
      L.gt0("d > 0", d);
      L.lt0("c < 0", c);
      L.le0("b+d <= 0", b + d);
      L.sq("f^2 = c(b+d)", f, c * (b + d));
      L.sq("l^2 = -d(b+d)", l, -d * (b + d));
      L.le0("f l <= 0", f * l);  // missing from the printed list (ERRATA)
      rep.derived = {{"alpha^2", 2 * d}, {"gamma^2", -2 * c}, {"beta^2", -2 * (b + d)}};
      break;
    }
    case AlgebraId::A52: {
      const double f = T(1, 2), l = T(2, 3);
      const double Al = a - b + e;
      const double Bl = a - b + d + 2 * e;
      const double Cl = a + d + 2 * e;
      L.eq("b+c+d+e = 0", b + c + d + e);
      L.gt0("e > 0", e);
      L.lt0("A = a-b+e < 0", Al);
      L.ge0("B = a-b+d+2e >= 0", Bl);
      L.lt0("C = a+d+2e < 0", Cl);
      L.sq("f^2 = -AB", f, -Al * Bl);
      L.sq("l^2 = -BC", l, -Bl * Cl);
      L.le0("f l <= 0", f * l);  // missing from the printed list (ERRATA)
      rep.derived = {{"A", Al}, {"B", Bl}, {"C", Cl}};
      break;
    }
    case AlgebraId::A41plusA1:
      break;  // handled above
  }
  return rep;
}

namespace detail {
inline std::optional<double> clamp_sq(double x) {
  if (x < -kClamp) return std::nullopt;
  return std::max(x, 0.0);
}

// enumerate sign assignments: pinned keys fixed, free keys run over {+1,-1}
inline std::vector<Coeffs> sign_combos(
    const std::vector<std::pair<std::string, double>> &pins) {
  std::vector<Coeffs> out{{}};
  for (const auto &[k, s] : pins) {
    if (s != 0.0) {
      for (auto &m : out) m[k] = s;
    } else {
      std::vector<Coeffs> next;
      for (const auto &m : out)
        for (double v : {1.0, -1.0}) {
          Coeffs mm = m;
          mm[k] = v;
          next.push_back(std::move(mm));
        }
      out = std::move(next);
    }
  }
  return out;
}
}  // namespace detail

struct Solution {
  Coeffs co;             // frame coefficients (includes "case" for A4,1+A1)
  double t;
  double residual;       // ||Ric(co) - t^2 T||_inf
  bool sufficiency_only; // A5,6: corrected chain proves sufficiency only
  int branch;            // A4,1+A1 branch, else 0
};

inline double prescribed_residual(AlgebraId id, const Coeffs &co, const Mat5 &Te) {
  return (ricci_orthonormal(pattern_tensor(id, co)) - Te).cwiseAbs().maxCoeff();
}

inline std::optional<Solution> solve_prescribed(AlgebraId id, const Mat5 &T,
                                                double t = 1.0,
                                                double resid_tol = kResid) {
  if (off_pattern_max(id, T) > 1e-10) return std::nullopt;
  const Mat5 Te = t * t * T;
  const double scale = std::max(1.0, Te.cwiseAbs().maxCoeff());
  auto accept = [&](Coeffs co, int branch, bool suff) -> std::optional<Solution> {
    const double r = prescribed_residual(id, co, Te);
    if (r > resid_tol * scale) return std::nullopt;
    return Solution{std::move(co), t, r, suff, branch};
  };
  const double a = Te(0, 0), b = Te(1, 1), c = Te(2, 2), d = Te(3, 3),
               e = Te(4, 4);

  if (id == AlgebraId::FiveA1) {
    if (Te.cwiseAbs().maxCoeff() > 1e-10) return std::nullopt;
    return Solution{{}, t, Te.cwiseAbs().maxCoeff(), false, 0};
  }

  if (id == AlgebraId::A41plusA1) {
    for (int cs : {1, 2}) {
      if (!check_conditions_a41(Te, cs).all_satisfied()) continue;
      if (cs == 1) {
        const double ee = Te(1, 2), f = Te(2, 4);
        const auto b2 = detail::clamp_sq(2 * (b - a));
        const auto a2 = detail::clamp_sq(-2 * (a + Te(4, 4)));
        const auto g2 = detail::clamp_sq(2 * (a - 2 * b - c));
        if (!b2 || !a2 || !g2) continue;
        const double gm = std::sqrt(*g2);
        const double pin = std::abs(ee) > kEq   ? -detail::sign_of(ee)
                           : std::abs(f) > kEq ? detail::sign_of(f)
                                               : 0.0;
        for (const auto &s : detail::sign_combos({{"g", pin}})) {
          Coeffs co{{"alpha", std::sqrt(*a2)}, {"beta", std::sqrt(*b2)},
                    {"gamma", s.at("g") * gm}, {"case", 1.0}};
          if (auto sol = accept(std::move(co), 1, false)) return sol;
        }
      } else {
        const double f = Te(2, 3);
        const auto a2 = detail::clamp_sq(-2 * (b + Te(3, 3)));
        const auto b2 = detail::clamp_sq(2 * Te(4, 4));
        const auto g2 = detail::clamp_sq(2 * Te(3, 3));
        if (!a2 || !b2 || !g2) continue;
        const double gm = std::sqrt(*g2);
        const double pin = std::abs(f) > kEq ? detail::sign_of(f) : 0.0;
        for (const auto &s : detail::sign_combos({{"g", pin}})) {
          Coeffs co{{"alpha", std::sqrt(*a2)}, {"beta", std::sqrt(*b2)},
                    {"gamma", s.at("g") * gm}, {"case", 2.0}};
          if (auto sol = accept(std::move(co), 2, false)) return sol;
        }
      }
    }
    return std::nullopt;
  }

  if (!check_conditions(id, Te).all_satisfied()) return std::nullopt;

  switch (id) {
    case AlgebraId::A54: {
      const double f = Te(0, 1), l = Te(2, 3);
      const auto g2 = detail::clamp_sq(-2 * b);
      const auto b2 = detail::clamp_sq(-2 * d);
      const auto a2 = detail::clamp_sq(2 * (b - c));
      if (!g2 || !b2 || !a2) return std::nullopt;
      const double am = std::sqrt(*a2);
      double pin = std::abs(f) > kEq   ? -detail::sign_of(f)
                   : std::abs(l) > kEq ? -detail::sign_of(l)
                                       : 0.0;
      if (am <= kEq) pin = 1.0;
      for (const auto &s : detail::sign_combos({{"a", pin}})) {
        Coeffs co{{"alpha", s.at("a") * am}, {"beta", std::sqrt(*b2)},
                  {"gamma", std::sqrt(*g2)}};
        if (auto sol = accept(std::move(co), 0, false)) return sol;
      }
      return std::nullopt;
    }
    case AlgebraId::A31plus2A1: {
      const auto a2 = detail::clamp_sq(-2 * a);
      if (!a2) return std::nullopt;
      return accept({{"alpha", std::sqrt(*a2)}}, 0, false);
    }
    case AlgebraId::A56: {
      const double f = Te(0, 1), g = Te(1, 2), i = Te(3, 4);
      const double s2 = -2 * (b + c + d + e);
      const double g2 = -2 * (a + b + 2 * c + 2 * d + 3 * e);
      if (s2 <= kStrict || g2 <= kStrict) return std::nullopt;
      const double d2 = 4 * f * f / s2;
      const auto b2 = detail::clamp_sq(2 * (b + c + 2 * d + 2 * e) - g2 - d2);
      if (!b2) return std::nullopt;
      const double a2 = 2 * (c + d + e) - *b2;
      const double e2 = -2 * d + *b2 + g2;
      if (a2 <= kStrict || e2 <= kStrict) return std::nullopt;
      const double pin_b = std::abs(g) > kEq ? -detail::sign_of(g) : 0.0;
      const double pin_d = std::abs(f) > kEq   ? -detail::sign_of(f)
                           : std::abs(i) > kEq ? detail::sign_of(i)
                                               : 0.0;
      for (const auto &s : detail::sign_combos({{"b", pin_b}, {"d", pin_d}})) {
        Coeffs co{{"alpha", -std::sqrt(a2)},
                  {"beta", s.at("b") * std::sqrt(*b2)},
                  {"gamma", std::sqrt(g2)},
                  {"delta", s.at("d") * std::sqrt(d2)},
                  {"epsilon", std::sqrt(e2)},
                  {"sigma", std::sqrt(s2)}};
        if (auto sol = accept(std::move(co), 0, true)) return sol;
      }
      return std::nullopt;
    }
    case AlgebraId::A55: {
      const double f = Te(0, 1), h = Te(0, 3);
      const double i = Te(1, 2), j = Te(2, 3), k = Te(3, 4);
      const auto a2 = detail::clamp_sq(-2 * (a + b + c + d + 2 * e));
      const auto b2 = detail::clamp_sq(2 * (a + b + 2 * c + 2 * d + 3 * e));
      const auto g2 = detail::clamp_sq(-2 * (a + c + d + e));
      const auto d2 = detail::clamp_sq(2 * (a + d + e));
      const auto e2 = detail::clamp_sq(-2 * (a + b + c + 2 * d + 2 * e));
      if (!a2 || !b2 || !g2 || !d2 || !e2) return std::nullopt;
      const double pin_b = std::abs(h) > kEq   ? detail::sign_of(h)
                           : std::abs(i) > kEq ? -detail::sign_of(i)
                           : std::abs(k) > kEq ? detail::sign_of(k)
                                               : 0.0;
      const double pin_d = std::abs(f) > kEq   ? -detail::sign_of(f)
                           : std::abs(j) > kEq ? -detail::sign_of(j)
                                               : 0.0;
      for (const auto &s : detail::sign_combos({{"b", pin_b}, {"d", pin_d}})) {
        Coeffs co{{"alpha", std::sqrt(*a2)},
                  {"beta", s.at("b") * std::sqrt(*b2)},
                  {"gamma", std::sqrt(*g2)},
                  {"delta", s.at("d") * std::sqrt(*d2)},
                  {"epsilon", std::sqrt(*e2)}};
        if (auto sol = accept(std::move(co), 0, false)) return sol;
      }
      return std::nullopt;
    }
    case AlgebraId::A53: {
      const double f = Te(0, 1), l = Te(1, 2), h = Te(2, 3), i = Te(3, 4);
      const auto e2 = detail::clamp_sq(-2 * (b + c + d + e));
      const auto d2 = detail::clamp_sq(2 * (b + c + d + 2 * e));
      const auto g2 = detail::clamp_sq(-2 * (a + b + 2 * c + 2 * d + 3 * e));
      const auto b2 = detail::clamp_sq(2 * (a + b + 2 * c + 3 * d + 3 * e));
      const auto a2 = detail::clamp_sq(-2 * (a + b + c + 2 * d + 2 * e));
      if (!e2 || !d2 || !g2 || !b2 || !a2) return std::nullopt;
      const double pin_b = std::abs(l) > kEq   ? -detail::sign_of(l)
                           : std::abs(h) > kEq ? detail::sign_of(h)
                                               : 0.0;
      const double pin_d = std::abs(f) > kEq   ? -detail::sign_of(f)
                           : std::abs(i) > kEq ? detail::sign_of(i)
                                               : 0.0;
      for (const auto &s : detail::sign_combos({{"b", pin_b}, {"d", pin_d}})) {
        Coeffs co{{"alpha", std::sqrt(*a2)},
                  {"beta", s.at("b") * std::sqrt(*b2)},
                  {"gamma", std::sqrt(*g2)},
                  {"delta", s.at("d") * std::sqrt(*d2)},
                  {"epsilon", std::sqrt(*e2)}};
        if (auto sol = accept(std::move(co), 0, false)) return sol;
      }
      return std::nullopt;
    }
    case AlgebraId::A51: {
      const double f = Te(1, 2), l = Te(3, 4);
      const auto a2 = detail::clamp_sq(2 * d);
      const auto g2 = detail::clamp_sq(-2 * c);
      const auto b2 = detail::clamp_sq(-2 * (b + d));
      if (!a2 || !g2 || !b2) return std::nullopt;
      const double pin = std::abs(f) > kEq   ? -detail::sign_of(f)
                         : std::abs(l) > kEq ? detail::sign_of(l)
                                             : 0.0;
      for (const auto &s : detail::sign_combos({{"b", pin}})) {
        Coeffs co{{"alpha", std::sqrt(*a2)},
                  {"beta", s.at("b") * std::sqrt(*b2)},
                  {"gamma", std::sqrt(*g2)}};
        if (auto sol = accept(std::move(co), 0, false)) return sol;
      }
      return std::nullopt;
    }
    case AlgebraId::A52: {
      const double f = Te(1, 2), l = Te(2, 3);
      const auto d2 = detail::clamp_sq(2 * e);
      const auto g2 = detail::clamp_sq(-2 * (a - b + e));
      const auto a2 = detail::clamp_sq(-2 * (a + d + 2 * e));
      const auto b2 = detail::clamp_sq(2 * (a - b + d + 2 * e));
      if (!d2 || !g2 || !a2 || !b2) return std::nullopt;
      const double pin = std::abs(f) > kEq   ? -detail::sign_of(f)
                         : std::abs(l) > kEq ? detail::sign_of(l)
                                             : 0.0;
      for (const auto &s : detail::sign_combos({{"b", pin}})) {
        Coeffs co{{"alpha", std::sqrt(*a2)},
                  {"beta", s.at("b") * std::sqrt(*b2)},
                  {"gamma", std::sqrt(*g2)},
                  {"delta", std::sqrt(*d2)}};
        if (auto sol = accept(std::move(co), 0, false)) return sol;
      }
      return std::nullopt;
    }
    default:
      throw std::logic_error("unhandled algebra in solve_prescribed");
  }
}

}  // namespace nilricci
