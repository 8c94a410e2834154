#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace nilricci;
using namespace nilricci::testing;

namespace {

Coeffs draw(AlgebraId id, Rng &r, bool coupled = false) {
  return coupled ? rand_coupled_coeffs(id, r) : rand_strict_coeffs(id, r);
}

bool conditions_flag(AlgebraId id, const Mat5 &T) {
  if (off_pattern_max(id, T) > 1e-10) return true;
  if (id == AlgebraId::A41plusA1)
    return !check_conditions_a41(T, 1).all_satisfied() &&
           !check_conditions_a41(T, 2).all_satisfied();
  return !check_conditions(id, T).all_satisfied();
}

const Condition &find_item(const ConditionReport &rep, const std::string &name) {
  for (const auto &c : rep.items)
    if (c.name == name) return c;
  FAIL("condition \"" << name << "\" not present in the report");
  static Condition dummy{};
  return dummy;
}

}  // namespace

TEST_CASE("the flat family accepts only the zero tensor") {
  CHECK(solve_prescribed(AlgebraId::FiveA1, Mat5::Zero()).has_value());
  CHECK(solve_prescribed(AlgebraId::FiveA1, 1e-12 * Mat5::Identity()).has_value());
  CHECK_FALSE(solve_prescribed(AlgebraId::FiveA1, 1e-3 * Mat5::Identity()).has_value());
}

TEST_CASE("forward instances are solved within tolerance") {
  Rng r(701);
  for (const auto &e : catalog()) {
    if (e.id == AlgebraId::FiveA1) continue;
    INFO(e.slug);
    double worst = 0.0;
    int solved = 0;
    bool conds_ok = true, suff_ok = true;
    for (int k = 0; k < 220; ++k) {
      const Coeffs co = draw(e.id, r);
      const Mat5 T = forward_target(e.id, co);
      const auto sol = solve_prescribed(e.id, T);
      if (!sol) break;
      ++solved;
      worst = std::max(worst, prescribed_residual(e.id, sol->co, T));
      suff_ok = suff_ok &&
                (sol->sufficiency_only == (e.id == AlgebraId::A56));
      if (e.id == AlgebraId::A41plusA1)
        conds_ok = conds_ok &&
                   check_conditions_a41(T, (int)std::llround(co.at("case")))
                       .all_satisfied();
      else
        conds_ok = conds_ok && check_conditions(e.id, T).all_satisfied();
    }
    CHECK(solved == 220);
    CHECK(worst <= 1e-8);
    CHECK(conds_ok);
    CHECK(suff_ok);
  }
}

TEST_CASE("solutions scale linearly in the parameter t") {
  Rng r(702);
  for (const auto &e : catalog()) {
    if (e.id == AlgebraId::FiveA1) continue;
    INFO(e.slug);
    bool ok = true;
    for (int k = 0; k < 10 && ok; ++k) {
      const Coeffs co = draw(e.id, r);
      const Mat5 T = forward_target(e.id, co);
      const auto base = solve_prescribed(e.id, T, 1.0);
      REQUIRE(base.has_value());
      for (double t : {0.5, 2.0}) {
        const auto st = solve_prescribed(e.id, T, t);
        if (!st) { ok = false; break; }
        const Mat5 Te = t * t * T;
        if (prescribed_residual(e.id, st->co, Te) >
            1e-8 * std::max(1.0, maxabs(Te))) { ok = false; break; }
        for (const auto &[key, v] : base->co) {
          if (key == "case") {
            if (std::llround(st->co.at(key)) != std::llround(v)) ok = false;
            continue;
          }
          if (std::abs(st->co.at(key) - t * v) >
              1e-8 * std::max(1.0, std::abs(v)))
            ok = false;
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("perturbed targets are rejected and flagged by the condition lists") {
  Rng r(703);
  for (const auto &e : catalog()) {
    if (e.id == AlgebraId::FiveA1) continue;
    INFO(e.slug);
    int total = 0, rejected = 0, flagged = 0;
    for (int kind = 0; kind < 4; ++kind) {
      for (int k = 0; k < 70; ++k) {
        const Coeffs co = draw(e.id, r, /*coupled=*/true);
        const Mat5 T = forward_target(e.id, co);
        Mat5 T2 = T;
        if (kind == 0) {
          T2 = -T;
        } else if (kind == 1) {
          const int i = (int)(r() % N);
          T2(i, i) += (r() & 1) ? 0.3 : -0.3;
        } else {
          std::vector<std::pair<int, int>> offs;
          for (const auto &[i, j] : prescribed_pattern(e.id))
            if (i != j && std::abs(T(i, j)) > 0.02) offs.push_back({i, j});
          if (kind == 2) {
            if (offs.empty()) continue;
            const auto [i, j] = offs[r() % offs.size()];
            T2(i, j) = T2(j, i) = 1.7 * T(i, j);
          } else {
            if (offs.size() < 2) continue;  // a lone coupling's sign is a gauge
            const auto [i, j] = offs[r() % offs.size()];
            T2(i, j) = T2(j, i) = -T(i, j);
          }
        }
        ++total;
        if (!solve_prescribed(e.id, T2)) ++rejected;
        if (conditions_flag(e.id, T2)) ++flagged;
      }
    }
    CHECK(total >= 140);
    CHECK(rejected == total);
    CHECK(flagged == total);
  }
}

TEST_CASE("a trace condition absent from the usual statement is load-bearing") {
  // diag(0,-1,-1,-1,1) satisfies every commonly quoted requirement for this
  // family, yet no metric realizes it: the second trace identity c+d+e = 0
  // fails by a full unit.  See docs/ERRATA.md.
  Mat5 T = Mat5::Zero();
  T.diagonal() << 0.0, -1.0, -1.0, -1.0, 1.0;
  const double a = T(0, 0), b = T(1, 1), c = T(2, 2), d = T(3, 3), e = T(4, 4);
  CHECK(std::abs(a + b + e) <= 1e-12);       // quoted trace identity holds
  CHECK(b < 0.0);
  CHECK(d < 0.0);
  CHECK(b - c >= 0.0);
  CHECK(std::abs(T(0, 1)) <= 1e-12);         // coupling equations hold trivially
  CHECK(std::abs(c + d + e) > 0.5);          // the omitted identity fails
  CHECK_FALSE(solve_prescribed(AlgebraId::A54, T).has_value());
  const auto rep = check_conditions(AlgebraId::A54, T);
  const auto &item = find_item(rep, "c+d+e = 0");
  CHECK_FALSE(item.satisfied);
  CHECK(item.residual > 0.5);
}

TEST_CASE("the first trace identity for the (1,2,4)(1,3,5) family reads a-b-c") {
  // a genuinely solvable target satisfies a-b-c = 0 while a+b+c is far from
  // zero, so the commonly quoted sign variant would reject every instance
  Coeffs co{{"alpha", std::sqrt(2.0)}, {"beta", 0.0}, {"gamma", std::sqrt(2.0)}};
  const Mat5 T = forward_target(AlgebraId::A51, co);
  CHECK(std::abs(T(0, 0) - T(1, 1) - T(2, 2)) <= 1e-12);
  CHECK(std::abs(T(0, 0) + T(1, 1) + T(2, 2)) > 0.5);
  CHECK(solve_prescribed(AlgebraId::A51, T).has_value());
}

TEST_CASE("a target passing the commonly quoted list is still unrealizable") {
  // passes a+b+c = 0, d > 0, c < 0, b+d <= 0, f^2 = c(b+d), l^2 = -d(b+d),
  // but violates the omitted trace identity b+c+d+e = 0
  Mat5 T = Mat5::Zero();
  T.diagonal() << 3.0, -2.0, -1.0, 1.0, 0.0;
  T(1, 2) = T(2, 1) = 1.0;
  T(3, 4) = T(4, 3) = -1.0;
  const double b = T(1, 1), c = T(2, 2), d = T(3, 3);
  CHECK(std::abs(T(0, 0) + b + c) <= 1e-12);
  CHECK(d > 0.0);
  CHECK(c < 0.0);
  CHECK(b + d <= 0.0);
  CHECK(std::abs(T(1, 2) * T(1, 2) - c * (b + d)) <= 1e-12);
  CHECK(std::abs(T(3, 4) * T(3, 4) + d * (b + d)) <= 1e-12);
  CHECK_FALSE(solve_prescribed(AlgebraId::A51, T).has_value());
  const auto rep = check_conditions(AlgebraId::A51, T);
  CHECK_FALSE(find_item(rep, "b+c+d+e = 0").satisfied);
}

TEST_CASE("derived letter E must read -(a+b+c+d+2e)") {
  // on a solvable diagonal target the variant -(a+c+2d+2e) is negative, so a
  // condition E > 0 stated with that letter would reject a solvable instance
  Coeffs co{{"alpha", 1.0}, {"beta", 0.0}, {"gamma", 1.0},
            {"delta", 0.0}, {"epsilon", 1.0}};
  const Mat5 T = forward_target(AlgebraId::A55, co);
  const double a = T(0, 0), c = T(2, 2), d = T(3, 3), e = T(4, 4);
  CHECK(-(a + c + 2 * d + 2 * e) < -0.1);
  const auto sol = solve_prescribed(AlgebraId::A55, T);
  REQUIRE(sol.has_value());
  const auto rep = check_conditions(AlgebraId::A55, T);
  CHECK(rep.derived.at("E") > 0.0);
  CHECK(find_item(rep, "E = -(a+b+c+d+2e) > 0").satisfied);
}

TEST_CASE("the (2,3) coupling square equals CD, not BD") {
  Coeffs co{{"alpha", 1.0}, {"beta", 1.0}, {"gamma", 1.0},
            {"delta", 0.0}, {"epsilon", 1.0}};
  const Mat5 T = forward_target(AlgebraId::A53, co);
  const double a = T(0, 0), b = T(1, 1), c = T(2, 2), d = T(3, 3), e = T(4, 4);
  const double B = b + c + d + 2 * e;
  const double C = -(a + b + 2 * c + 2 * d + 3 * e);
  const double D = a + b + 2 * c + 3 * d + 3 * e;
  const double l = T(1, 2);
  CHECK(std::abs(l * l - C * D) <= 1e-12);
  CHECK(std::abs(l * l - B * D) > 0.1);
  CHECK(solve_prescribed(AlgebraId::A53, T).has_value());
}

TEST_CASE("second-branch trace identity and target shape") {
  Coeffs co{{"alpha", 1.0}, {"beta", 2.0}, {"gamma", 1.0}, {"case", 2.0}};
  const Mat5 T = forward_target(AlgebraId::A41plusA1, co);
  const double a = T(0, 0), b = T(1, 1), c = T(2, 2), d = T(3, 3);
  // the identity reads 2b+c+d-a = 0; the variant 2b-c-a+d misses by far
  CHECK(std::abs(2 * b + c + d - a) <= 1e-12);
  CHECK(std::abs(2 * b - c - a + d) > 0.5);
  // the branch's coupling sits at (3,4) with a live (4,4) diagonal (1-based),
  // not in the first branch's slots
  CHECK(std::abs(T(2, 3)) > 0.1);
  CHECK(std::abs(T(3, 3)) > 0.1);
  const auto sol = solve_prescribed(AlgebraId::A41plusA1, T);
  REQUIRE(sol.has_value());
  CHECK(sol->branch == 2);
}

TEST_CASE("solvable targets for the filiform family have a strictly negative trace tail") {
  // a requirement "b+c+d+e = 0" would contradict sigma^2 = -2(b+c+d+e) > 0 and
  // accept no instance at all; forward targets always carry a negative tail
  Rng r(704);
  const Coeffs co = draw(AlgebraId::A56, r);
  const Mat5 T = forward_target(AlgebraId::A56, co);
  const double tail = T(1, 1) + T(2, 2) + T(3, 3) + T(4, 4);
  CHECK(tail < -0.01);
  const auto sol = solve_prescribed(AlgebraId::A56, T);
  REQUIRE(sol.has_value());
  CHECK(sol->sufficiency_only);
}

TEST_CASE("a 1e-3 trace violation is rejected and named") {
  Rng r(705);
  const Coeffs co = draw(AlgebraId::A54, r);
  Mat5 T = forward_target(AlgebraId::A54, co);
  T(0, 0) += 1e-3;
  CHECK_FALSE(solve_prescribed(AlgebraId::A54, T).has_value());
  CHECK_FALSE(check_conditions(AlgebraId::A54, T).all_satisfied());
}

TEST_CASE("off-pattern entries are rejected before any condition runs") {
  Rng r(706);
  Mat5 T = forward_target(AlgebraId::A51, draw(AlgebraId::A51, r));
  T(0, 1) = T(1, 0) = 0.1;
  CHECK(off_pattern_max(AlgebraId::A51, T) > 0.05);
  CHECK_FALSE(solve_prescribed(AlgebraId::A51, T).has_value());
}
