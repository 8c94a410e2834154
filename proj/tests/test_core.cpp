#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace nilricci;
using namespace nilricci::testing;

TEST_CASE("catalog has nine algebras with unique ids") {
  REQUIRE(catalog().size() == 9);
  std::set<std::string> slugs;
  for (const auto &e : catalog()) slugs.insert(e.slug);
  REQUIRE(slugs.size() == 9);
}

TEST_CASE("antisymmetry and Jacobi hold exactly for every catalog entry") {
  for (const auto &e : catalog()) {
    INFO(e.slug);
    CHECK(e.sc.antisymmetry_defect() == 0.0);
    CHECK(jacobi_defect(e.sc) == 0.0);
  }
}

TEST_CASE("lower central series matches the known filtration dimensions") {
  const std::map<std::string, std::vector<int>> want = {
      {"5A1", {5, 0}},          {"A54", {5, 1, 0}},
      {"A31+2A1", {5, 1, 0}},   {"A41+A1", {5, 2, 1, 0}},
      {"A56", {5, 3, 2, 1, 0}}, {"A55", {5, 2, 1, 0}},
      {"A53", {5, 3, 2, 0}},    {"A51", {5, 2, 0}},
      {"A52", {5, 3, 2, 1, 0}}};
  for (const auto &e : catalog()) {
    INFO(e.slug);
    CHECK(lower_central_series(e.sc) == want.at(e.slug));
  }
}

TEST_CASE("bracket is antisymmetric and agrees with ad") {
  Rng r(101);
  for (const auto &e : catalog()) {
    INFO(e.slug);
    double worst_anti = 0.0, worst_ad = 0.0;
    for (int k = 0; k < 100; ++k) {
      const Vec5 x = rand_vector(r), y = rand_vector(r);
      worst_anti = std::max(
          worst_anti,
          (bracket(e.sc, x, y) + bracket(e.sc, y, x)).cwiseAbs().maxCoeff());
      worst_ad = std::max(
          worst_ad, (ad(e.sc, x) * y - bracket(e.sc, x, y)).cwiseAbs().maxCoeff());
    }
    CHECK(worst_anti <= 1e-12);
    CHECK(worst_ad <= 1e-12);
  }
}

TEST_CASE("ad of a central element vanishes") {
  // e5 is central for every non-abelian entry in the catalog
  for (const auto &e : catalog()) {
    Vec5 u = Vec5::Zero();
    u[4] = 1.0;
    INFO(e.slug);
    CHECK(ad(e.sc, u).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("swapping one product target in A5,4 breaks the Jacobi identity") {
  // [e2,e3] = e5 -> e4: the quadruple (1,2,3 | 5) then fails with defect 1
  StructureConstants sc = catalog_sc(AlgebraId::A54);
  sc.put1(2, 3, 5, 0.0);
  sc.put1(2, 3, 4, 1.0);
  CHECK(sc.antisymmetry_defect() == 0.0);
  CHECK(jacobi_defect(sc) == 1.0);
}

TEST_CASE("injected non-closed entries give a nonzero Jacobi defect") {
  StructureConstants sc{};
  sc.put1(1, 2, 3, 1.0);
  sc.put1(1, 3, 4, 1.0);
  sc.put1(2, 3, 5, 0.0);
  sc.put1(3, 4, 1, 1.0);
  CHECK(jacobi_defect(sc) > 0.5);
}

TEST_CASE("algebra id parsing accepts the common spellings") {
  const std::vector<std::pair<std::string, AlgebraId>> cases = {
      {"5A1", AlgebraId::FiveA1},      {"A54", AlgebraId::A54},
      {"A5,4", AlgebraId::A54},        {"a5_4", AlgebraId::A54},
      {"A31+2A1", AlgebraId::A31plus2A1},
      {"A3,1+2A1", AlgebraId::A31plus2A1},
      {"A3,1 + 2A1", AlgebraId::A31plus2A1},
      {"A41+A1", AlgebraId::A41plusA1},
      {"A4,1+A1", AlgebraId::A41plusA1},
      {"a56", AlgebraId::A56},         {"A5,5", AlgebraId::A55},
      {"A53", AlgebraId::A53},         {"A5,1", AlgebraId::A51},
      {"A52", AlgebraId::A52}};
  for (const auto &[txt, id] : cases) {
    INFO(txt);
    auto got = parse_algebra_id(txt);
    REQUIRE(got.has_value());
    CHECK(*got == id);
  }
  CHECK_FALSE(parse_algebra_id("A57").has_value());
  CHECK_FALSE(parse_algebra_id("").has_value());
  CHECK_FALSE(parse_algebra_id("nonsense").has_value());
}

TEST_CASE("slug round-trips through the parser") {
  for (const auto &e : catalog()) {
    auto got = parse_algebra_id(e.slug);
    REQUIRE(got.has_value());
    CHECK(*got == e.id);
  }
}
