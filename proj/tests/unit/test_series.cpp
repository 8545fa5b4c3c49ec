#include <doctest.h>

#include <random>

#include "cyc/series/series.hpp"
#include "oracles.hpp"

using namespace cyc;
using namespace cyc::series;

TEST_SUITE("series") {
  TEST_CASE("complete intersection coefficients match the Koszul oracle") {
    const std::vector<HilbertData> cases = {
        {{1, 1, 1, 1, 2}, {6}},     {{1, 1, 1, 1, 1, 2}, {3, 4}}, {{1, 1, 1, 1, 1, 1}, {3, 3}},
        {{1, 1, 1, 1, 1, 1, 1}, {2, 2, 3}}, {{1, 1, 1, 2, 3}, {6}},  {{1, 1, 1, 1, 1}, {2, 2, 3, 3}}};
    for (const auto& h : cases) {
      const auto c = series_coefficients(ci_hilbert_series(h), 15);
      for (int n = 0; n <= 15; ++n) CHECK(c[static_cast<std::size_t>(n)] == oracle::ci_hilbert_function(h.weights, h.degrees, n));
    }
  }

  TEST_CASE("quintic node scheme has HF(5) = 35") {
    const auto c = series_coefficients(ci_hilbert_series({{1, 1, 1, 1, 1}, {2, 2, 3, 3}}), 6);
    CHECK(c[5] == 35);
    CHECK(c[6] == 36);
    CHECK(defect_quintic(35, 36) == 1);
    CHECK(defect(91, 126, 36) == 1);
    CHECK_THROWS_AS(defect(10, 126, 36), std::invalid_argument);
    CHECK_THROWS_AS(defect_quintic(127, 36), std::invalid_argument);
  }

  TEST_CASE("image degree and embedding dimension") {
    const auto two_cubics = ci_hilbert_series({{1, 1, 1, 1, 1, 1}, {3, 3}});
    CHECK(image_degree(two_cubics, 3) == 9);
    CHECK(embedding_dimension(two_cubics) == 5);
    CHECK(numerator_over_standard(two_cubics, 4) == IntPolynomial{1, 1, 1} * IntPolynomial{1, 1, 1});
    try {
      numerator_over_standard(ci_hilbert_series({{1, 1, 1, 1, 2}, {6}}), 1);
      FAIL("no throw");
    } catch (const NotPolynomial& e) {
      CHECK(e.remainder_degree() >= 0);
    }
  }

  TEST_CASE("series_equal is an equivalence relation") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3), den(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
      IntPolynomial p{coef(rng), coef(rng), coef(rng)};
      std::vector<int> d{den(rng), den(rng)};
      const RationalSeries a(p, d);
      // same function, different representation: multiply through by (1 - t^k)
      const int k = den(rng);
      std::vector<int> d2 = d;
      d2.push_back(k);
      const RationalSeries b(p * IntPolynomial::one_minus_power(k), d2);
      const int j = den(rng);
      std::vector<int> d3 = d2;
      d3.push_back(j);
      const RationalSeries c(p * IntPolynomial::one_minus_power(k) * IntPolynomial::one_minus_power(j), d3);
      CHECK(series_equal(a, a));
      CHECK(series_equal(a, b) == series_equal(b, a));
      CHECK(series_equal(a, b));
      CHECK(series_equal(b, c));
      CHECK(series_equal(a, c));
      CHECK(series_coefficients(a, 12) == series_coefficients(c, 12));
      const RationalSeries other(p + IntPolynomial{1}, d);
      CHECK_FALSE(series_equal(a, other));
    }
  }

  TEST_CASE("general numerator form equals the product form") {
    // t^4 + (r-1)t^3 + r t^2 + (r-1)t + 1 over (1-t)^4
    const std::vector<HilbertData> fibers = {{{1, 1, 1, 1, 2}, {6}},
                                             {{1, 1, 1, 1, 1, 2}, {3, 4}},
                                             {{1, 1, 1, 1, 1, 1}, {3, 3}},
                                             {{1, 1, 1, 1, 1, 1, 1}, {2, 2, 3}}};
    for (int r = 1; r <= 5; ++r) {
      const RationalSeries general(IntPolynomial{1, r - 1, r, r - 1, 1}, {1, 1, 1, 1});
      const RationalSeries product =
          r <= 4 ? ci_hilbert_series(fibers[static_cast<std::size_t>(r - 1)])
                 : RationalSeries(IntPolynomial{1, 0, -5, 5, 0, -1} * IntPolynomial::one_minus_power(3),
                                  {1, 1, 1, 1, 1, 1, 1, 1});
      CHECK(series_equal(general, product));
      const auto c = series_coefficients(general, 10);
      for (int n = 0; n <= 10; ++n) CHECK(c[static_cast<std::size_t>(n)] == section_dims_construction1(r, n));
      CHECK(image_degree(general, 3) == 3 * r);
    }
  }

  TEST_CASE("Riemann-Roch on index-two Fano threefolds") {
    // chi(O(n)) on a cubic threefold against direct counting on P^4
    for (int n = 0; n <= 6; ++n)
      CHECK(riemann_roch_fano(3, n) == oracle::ci_hilbert_function({1, 1, 1, 1, 1}, {3}, n));
    CHECK(riemann_roch_fano(1, -1) == 0);
    CHECK(riemann_roch_fano(2, -2) == -1);  // Serre duality: chi(K) = -chi(O)
    CHECK_THROWS_AS(riemann_roch_fano(6, 1), std::invalid_argument);
  }

  TEST_CASE("three double covers of P^3") {
    const RationalSeries s1(IntPolynomial{1, 17, 27, 17, 1}, {1, 1, 1, 1});
    CHECK(image_degree(s1, 3) == 63);
    CHECK(embedding_dimension(s1) == 20);
    const RationalSeries s2(IntPolynomial{1, 6, 1} * IntPolynomial::one_minus_power(3), {1, 1, 1, 1, 1});
    CHECK(image_degree(s2, 3) == 24);
    CHECK(embedding_dimension(s2) == 10);
    CHECK(series_equal(s2, veronese(ci_hilbert_series({{1, 1, 1, 1, 2}, {6}}), 2)));
    const auto s3 = ci_hilbert_series({{1, 1, 1, 1, 1}, {5}});
    CHECK(image_degree(s3, 3) == 5);
    CHECK(embedding_dimension(s3) == 4);
  }

  TEST_CASE("Veronese picks every k-th coefficient") {
    const auto s = ci_hilbert_series({{1, 1, 1, 2}, {3}});
    for (int k = 1; k <= 3; ++k) {
      const auto v = series_coefficients(veronese(s, k), 8);
      const auto c = series_coefficients(s, 8 * k);
      for (int n = 0; n <= 8; ++n) CHECK(v[static_cast<std::size_t>(n)] == c[static_cast<std::size_t>(n * k)]);
    }
    CHECK(image_degree(veronese(ci_hilbert_series({{1, 1, 1, 1, 1}, {5}}), 2), 3) == 40);
  }

  TEST_CASE("Calabi-Yau Riemann-Roch series") {
    // quintic: L^3 = 5, c2.L = 50
    CHECK(series_equal(cy3_series(5, 50), ci_hilbert_series({{1, 1, 1, 1, 1}, {5}})));
    CHECK(series_equal(cy3_series(9, 54), ci_hilbert_series({{1, 1, 1, 1, 1, 1}, {3, 3}})));
    CHECK_THROWS_AS(cy3_series(1, 1), DomainError);
  }

  TEST_CASE("text and JSON forms") {
    const auto s = ci_hilbert_series({{1, 1, 2}, {2}});
    CHECK(to_string(s) == "1 0 -1 || 1,1,2");
    CHECK(parse_series(to_string(s)) == s);
    CHECK_THROWS_AS(parse_series("1 2 3"), ParseError);
    CHECK_THROWS_AS(parse_series("1 || 0"), ParseError);
    CHECK_THROWS_AS(parse_series("1 x || 1"), ParseError);
    const auto j = to_json(s, 3);
    CHECK(j["coefficients"] == nlohmann::json({1, 2, 3, 4}));
  }
}
