#include <doctest.h>

#include "cyc/chern/chern.hpp"
#include "oracles.hpp"

using namespace cyc;
using namespace cyc::chern;
using series::HilbertData;

TEST_SUITE("chern") {
  TEST_CASE("Euler numbers of classical Calabi-Yau complete intersections") {
    // tabulated values for well-known families
    const std::vector<std::pair<HilbertData, long long>> known = {
        {{{1, 1, 1, 1, 1}, {5}}, -200},
        {{{1, 1, 1, 1, 2}, {6}}, -204},
        {{{1, 1, 1, 1, 4}, {8}}, -296},
        {{{1, 1, 1, 2, 5}, {10}}, -288},
        {{{1, 1, 1, 1, 1, 1}, {3, 3}}, -144},
        {{{1, 1, 1, 1, 1, 1}, {2, 4}}, -176},
        {{{1, 1, 1, 1, 1, 1, 1}, {2, 2, 3}}, -144},
        {{{1, 1, 1, 1, 1, 1, 1, 1}, {2, 2, 2, 2}}, -128},
        {{{1, 1, 1, 1, 1, 2}, {3, 4}}, -156},
    };
    for (const auto& [h, chi] : known) CHECK(ci_euler_weighted(h) == chi);
  }

  TEST_CASE("c2.H of complete intersections") {
    CHECK(ci_c2_dot_h({{1, 1, 1, 1, 1}, {5}}) == 50);
    CHECK(ci_c2_dot_h({{1, 1, 1, 1, 1, 1}, {3, 3}}) == 54);
    CHECK(ci_c2_dot_h({{1, 1, 1, 1, 2}, {6}}) == 42);
  }

  TEST_CASE("non Calabi-Yau input is rejected") {
    CHECK_THROWS_AS(ci_euler_weighted({{1, 1, 1, 1, 1}, {4}}), std::invalid_argument);
    CHECK_THROWS_AS(ci_euler_weighted({{1, 1, 1, 1}, {4}}), std::invalid_argument);
    // the cubic threefold is fine without the Calabi-Yau condition
    CHECK(ci_threefold_euler({{1, 1, 1, 1, 1}, {3}}) == -6);
  }

  TEST_CASE("ambient data for projective space agrees with the weighted path") {
    CHECK(ci_euler_ambient(AmbientChernData::projective_space(4), {5}) == -200);
    CHECK(ci_euler_ambient(AmbientChernData::projective_space(5), {3, 3}) == -144);
    CHECK(ci_euler_ambient(AmbientChernData::projective_space(6), {2, 2, 3}) == -144);
    CHECK(ci_euler_ambient(AmbientChernData::projective_space(7), {2, 2, 2, 2}) == -128);
  }

  TEST_CASE("G(2,5) data") {
    const auto g = AmbientChernData::grassmannian_g25();
    CHECK(g.dimension() == 6);
    CHECK(g.at({0, 0, 0, 0, 0, 0, 6}) == 5);   // degree: standard tableaux of the 2x3 box
    CHECK(g.at({0, 0, 0, 0, 0, 1, 0}) == 10);  // Euler number: Schubert cells
    // c1 = 5H
    Integer five_power = 5;
    for (int k = 0; k <= 6; ++k) {
      std::vector<int> key(7, 0);
      key[0] = k;
      key[6] = 6 - k;
      CHECK(g.at(key) == five_power);
      five_power *= 5;
    }
    CHECK(ci_euler_ambient(g, {3, 1, 1}) == -150);
    CHECK(ci_euler_ambient(g, {1, 2, 2}) == -120);
    CHECK(AmbientChernData::parse(g.to_string()).numbers() == g.numbers());
  }

  TEST_CASE("missing or malformed Chern data") {
    const auto partial = AmbientChernData::parse("dimension 4\n0 0 0 0 4 : 5\n# comment\n");
    CHECK_THROWS_AS(partial.at({1, 0, 0, 0, 3}), MissingChernNumber);
    try {
      ci_euler_ambient(partial, {5});
      FAIL("no throw");
    } catch (const MissingChernNumber& e) {
      CHECK(e.key().size() == 5);
    }
    CHECK_THROWS_AS(AmbientChernData::parse("0 0 2 : 1"), ParseError);
    CHECK_THROWS_AS(AmbientChernData::parse("dimension 2\n0 2 : 1"), ParseError);
    CHECK_THROWS_AS(AmbientChernData::parse("dimension 2\n0 0 2 : x"), ParseError);
    CHECK_THROWS_AS(AmbientChernData::parse("dimension 2\n0 1 2 : 1\n0 0 2 : 1"), std::invalid_argument);
  }

  TEST_CASE("Fano models") {
    for (const auto& f : {FanoModel::projective_space(), FanoModel::quadric(), FanoModel::index_two(1),
                          FanoModel::index_two(5)})
      CHECK_NOTHROW(f.validate());
    CHECK(FanoModel::index_two(1).chi_top == -38);
    CHECK(FanoModel::index_two(3).chi_top == -6);
    CHECK(FanoModel::index_two(5).chi_top == 4);
    CHECK_THROWS_AS(FanoModel::index_two(6), std::invalid_argument);
    FanoModel bad = FanoModel::quadric();
    bad.Hc2 = 7;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  }

  TEST_CASE("surfaces and curves in P^3 against Noether and genus formulas") {
    const auto p3 = FanoModel::projective_space();
    for (int d = 1; d <= 9; ++d) CHECK(surface_euler_fano(p3, d) == Integer(d) * d * d - 4 * d * d + 6 * d);
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b) CHECK(curve_euler_ci_fano(p3, a, b) == -Integer(a) * b * (a + b - 4));
    CHECK(surface_euler_fano(p3, 6) == 108);
    CHECK(curve_euler_ci_fano(p3, 6, 2) == -48);
    // hyperplane sections of Q3 are quadric surfaces
    CHECK(surface_euler_fano(FanoModel::quadric(), 1) == 4);
    for (int r = 1; r <= 9; ++r) CHECK(delpezzo_euler(r) == 12 - r);
    CHECK_THROWS_AS(delpezzo_euler(10), std::invalid_argument);
  }
}
