#include <doctest.h>

#include <algorithm>
#include <random>

#include "cyc/contraction/contraction.hpp"

using namespace cyc;
using namespace cyc::contraction;

namespace {

RankTwoPicardModel model(long long l3, Rational lambda, int r) {
  RankTwoPicardModel m;
  m.L3 = l3;
  m.lambda = lambda;
  m.r = r;
  return m;
}

}  // namespace

TEST_SUITE("contraction") {
  TEST_CASE("triple products") {
    for (int r = 1; r <= 5; ++r) CHECK(triple_product(model(2 * r, -1, r), 1, 1) == 3 * r);
    CHECK(triple_product(model(5, -1, 4), 1, 1) == 9);
    CHECK(triple_product(model(7, Rational(-1, 3), 2), 1, 0) == 7);
    CHECK(contraction_image_degree(model(2, Rational(-1, 3), 9)) == 63);
    CHECK(contraction_image_degree(model(4, Rational(-1, 2), 8)) == 40);
    CHECK(contraction_image_degree(model(9, -1, 5)) == 14);
    CHECK_THROWS_AS(contraction_image_degree(model(3, Rational(-2, 3), 2)), DomainError);
    CHECK_THROWS_AS(model(3, Rational(1, 2), 2).validate(), std::invalid_argument);
    CHECK_THROWS_AS(model(3, -1, 10).validate(), std::invalid_argument);
  }

  TEST_CASE("triple product is a homogeneous cubic") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> v(-6, 6), den(1, 4), rr(1, 9);
    for (int trial = 0; trial < 300; ++trial) {
      const auto m = model(v(rng), Rational(-1, den(rng)), rr(rng));
      const Rational a(v(rng), den(rng)), b(v(rng), den(rng)), s(v(rng), den(rng));
      CHECK(triple_product(m, s * a, s * b) == s * s * s * triple_product(m, a, b));
      if (denominator(Rational(-1 / m.lambda)) == 1)
        CHECK(Rational(contraction_image_degree(m)) == triple_product(m, -1 / m.lambda, 1));
    }
  }

  TEST_CASE("Euler bookkeeping") {
    const auto p3 = FanoModel::projective_space();
    CHECK(double_cover_euler(p3, -48, 4, 108) == -200);
    CHECK(double_cover_euler(p3, -28, 3, 189) == -240);
    CHECK(double_cover_euler(FanoModel::index_two(1), -6, 11, 45) == -144);
    CHECK(conifold_euler(-200, 36, true) == -128);
    CHECK(conifold_euler(-144, 28, true) == -88);
    CHECK(conifold_euler(-200, 36, false) == -164);
    CHECK(conifold_euler(-17, 0, false) == -17);
    CHECK(contraction_euler(-128, 4) == -135);
    CHECK(contraction_euler(-88, 5) == -94);
    CHECK_THROWS_AS(contraction_euler(0, 11), std::invalid_argument);
  }

  TEST_CASE("Hodge shifts and smoothing") {
    const std::vector<std::vector<int>> shifts = {{29}, {17}, {11}, {7}, {4}, {1, 2}, {1}, {1}};
    for (int r = 1; r <= 8; ++r) {
      CHECK(hodge_shift(r).smoothable);
      CHECK(hodge_shift(r).increments == shifts[static_cast<std::size_t>(r - 1)]);
    }
    CHECK_FALSE(hodge_shift(9).smoothable);
    CHECK_THROWS_AS(hodge_shift(0), std::invalid_argument);
    CHECK(smoothing_euler(-144, 1) == std::vector<Integer>{-204});
    CHECK(smoothing_euler(-128, 4) == std::vector<Integer>{-144});
    CHECK(smoothing_euler(-88, 5) == std::vector<Integer>{-98});
    CHECK(smoothing_euler(-100, 6).size() == 2);
    CHECK_THROWS_AS(smoothing_euler(-240, 9), NotSmoothable);
    const auto h = smoothing_hodge(2, 76, 4);
    REQUIRE(h.size() == 1);
    CHECK(h[0] == std::pair<Integer, Integer>(1, 83));
    CHECK(smoothing_hodge(2, 10, 6).size() == 2);
    CHECK_THROWS_AS(smoothing_hodge(1, 10, 4), std::invalid_argument);
    CHECK_THROWS_AS(smoothing_hodge(2, 10, 9), NotSmoothable);
    // h11 always drops by one
    for (int r = 1; r <= 8; ++r)
      for (const auto& [h11, h12] : smoothing_hodge(5, 20, r)) CHECK(h11 == 4);
  }

  TEST_CASE("Milnor correction") {
    CHECK(milnor_correction(4) == -9);
    CHECK(milnor_correction(3) == -16);
    CHECK(milnor_correction(1) == -50);
    CHECK_THROWS_AS(milnor_correction(6), std::invalid_argument);
    // equal to chi(smoothing) - chi(contraction) along every pipeline
    for (const auto& spec : construction_catalogue()) {
      const int r = spec.del_pezzo_degree;
      if (r > 5) continue;
      const auto p = euler_pipeline(spec);
      REQUIRE(p.chi_smoothing);
      CHECK(*p.chi_smoothing - p.chi_contracted == milnor_correction(r));
    }
  }

  TEST_CASE("catalogue and Picard models") {
    const auto& c = construction_catalogue();
    CHECK(c.size() == 15);
    CHECK(construction("c2-i1").del_pezzo_degree == 9);
    CHECK_THROWS_AS(construction("c9"), std::invalid_argument);
    for (const auto& spec : c) CHECK(picard_model(spec).r == spec.del_pezzo_degree);
    const auto q = picard_model(construction("q3-m1"));
    CHECK(q.L3 == 4);
    CHECK(q.lambda == Rational(-1, 2));
    const auto n = picard_model(construction("c4-deg5"));
    CHECK(n.L3 == 9);
    CHECK(contraction_image_degree(n) == 14);
  }

  TEST_CASE("Table 1 values") {
    const std::vector<std::pair<std::string, long long>> chi = {
        {"c1-r1", -204}, {"c1-r2", -156}, {"c1-r3", -144}, {"c1-r4", -144}, {"c1-r5", -150},
        {"c2-i2", -204}, {"c2-i3", -200}, {"q3-m2", -176}, {"q3-m1", -200}, {"c3-deg3", -176},
        {"c3-deg4", -144}, {"c4-deg5", -98}, {"c4-deg3", -144}, {"c4-deg4", -120}};
    const auto rows = table1();
    REQUIRE(rows.size() == 15);
    int with_chi = 0;
    for (const auto& row : rows) {
      if (!row.chi_smoothing) {
        CHECK(row.tag == "c2-i1");
        CHECK(row.image_degree == 63);
        CHECK(row.embedding_dimension == 20);
        CHECK(row.to_json()["chi_smoothing"].is_null());
        continue;
      }
      ++with_chi;
      for (const auto& [tag, v] : chi)
        if (tag == row.tag) CHECK(*row.chi_smoothing == v);
      CHECK(std::find(row.consistency.begin(), row.consistency.end(), "degree:picard=series") != row.consistency.end());
    }
    CHECK(with_chi == 14);
    CHECK(table1_row(construction("c1-r3")).image_tag == "Y_{3,3} in P^5");
    CHECK(table1_row(construction("c4-deg5")).embedding_dimension == 6);
  }

  TEST_CASE("smoothing Euler number equals the complete-intersection fiber") {
    int fibers = 0;
    for (const auto& spec : construction_catalogue()) {
      if (!spec.fiber) continue;
      ++fibers;
      CHECK(*euler_pipeline(spec).chi_smoothing == chern::ci_euler_weighted(*spec.fiber));
    }
    CHECK(fibers >= 5);
  }

  TEST_CASE("Table 3") {
    const auto rows = table3();
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].chi_x == -240);
    CHECK(rows[1].chi_x == -200);
    CHECK(rows[2].chi_x == -176);
    CHECK(rows[1].chi_g == 108);
    CHECK(rows[1].chi_c == -48);
    CHECK_FALSE(rows[0].chi_smoothing);
    for (const auto& r : rows) CHECK(r.chi_x != -220);
  }
}
