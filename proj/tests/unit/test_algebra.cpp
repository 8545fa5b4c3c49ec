#include <doctest.h>

#include <random>

#include "cyc/algebra/poly.hpp"
#include "cyc/error.hpp"
#include "oracles.hpp"

using namespace cyc;
using namespace cyc::algebra;

namespace {

MultiPoly random_small(const Ring& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(0, 2), num(-5, 5), den(1, 3);
  MultiPoly f(ring);
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m(ring.variables());
    for (std::size_t i = 0; i < ring.variables(); ++i) m[i] = static_cast<std::uint32_t>(expo(rng));
    const Rational q(num(rng), den(rng));
    f.add_term(m, Coefficient::from_rational(q, ring.domain()));
  }
  return f;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("coefficients stay canonical") {
    const Coefficient q(Rational(Integer(6)) / Integer(-4));
    CHECK(q.rational() == Rational(-3, 2));
    CHECK(q.to_string() == "-3/2");
    const auto d = Domain::prime_field(7);
    CHECK(Coefficient::from_integer(-1, d).residue_value() == 6);
    CHECK(Coefficient::from_rational(Rational(1, 2), d).residue_value() == 4);
    CHECK_THROWS_AS(Coefficient::from_rational(Rational(1, 7), d), DomainError);
    CHECK_THROWS_AS(Coefficient::one(d) + Coefficient::one(Domain::prime_field(5)), DomainError);
    CHECK_THROWS_AS(Domain::prime_field(32004), DomainError);
  }

  TEST_CASE("parse and print round-trip") {
    const Ring r(3);
    for (const char* text : {"x0^2 - 3/2*x0*x1 + 7", "-x2", "0", "x1^3 + x0*x1*x2", "5"}) {
      const auto f = poly_parse(text, r);
      CHECK(to_string(f) == text);
      CHECK(poly_parse(to_string(f), r) == f);
    }
    CHECK(to_string(poly_parse("x1 + x0", r)) == "x0 + x1");
    CHECK(poly_parse("x0 - x0", r).is_zero());
  }

  TEST_CASE("parse errors carry positions") {
    const Ring r(2);
    try {
      poly_parse("x0 + x5", r);
      FAIL("no throw");
    } catch (const ParseError& e) {
      CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(poly_parse("x0 +", r), ParseError);
    CHECK_THROWS_AS(poly_parse("x0 ** x1", r), ParseError);
    CHECK_THROWS_AS(poly_parse("1/0", r), ParseError);
    CHECK_THROWS_AS(poly_parse("1/3*x0", Ring(2, Domain::prime_field(3))), DomainError);
  }

  TEST_CASE("ring axioms on 1000 random triples") {
    std::mt19937_64 rng(2024);
    for (const auto& dom : {Domain::rationals(), Domain::prime_field(32003)}) {
      const Ring r(3, dom);
      for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_small(r, rng), b = random_small(r, rng), c = random_small(r, rng);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a).is_zero());
        REQUIRE(a * MultiPoly::constant(r, 1) == a);
        REQUIRE(poly_arith(a, b, ArithOp::sub) == a - b);
      }
    }
  }

  TEST_CASE("mixed rings are rejected") {
    const auto a = MultiPoly::variable(Ring(2), 0);
    const auto b = MultiPoly::variable(Ring(3), 0);
    CHECK_THROWS_AS(a + b, RingMismatch);
    CHECK_THROWS_AS(poly_arith(a, b, ArithOp::mul), RingMismatch);
  }

  TEST_CASE("weighted degree") {
    const Ring w(Domain::rationals(), WeightedGrading({1, 1, 1, 2, 3}));
    CHECK(weighted_degree(poly_parse("x4^2 + x3^3 + x0^6", w)) == 6);
    CHECK_THROWS_AS(weighted_degree(poly_parse("x4 + x0", w)), NotHomogeneous);
    CHECK_THROWS_AS(weighted_degree(MultiPoly(w)), std::invalid_argument);
    CHECK(weighted_degree(poly_parse("x3*x0", w), WeightedGrading::standard(5)) == 2);
    CHECK_THROWS_AS(WeightedGrading({1, 0}), std::invalid_argument);
  }

  TEST_CASE("random homogeneous forms are dense and deterministic") {
    const Ring r(4, Domain::prime_field(32003));
    const auto f = random_homogeneous(3, r, 11);
    CHECK(f == random_homogeneous(3, r, 11));
    CHECK(f != random_homogeneous(3, r, 12));
    CHECK(weighted_degree(f) == 3);
    CHECK(f.size() == static_cast<std::size_t>(oracle::binomial(6, 3)));
    const Ring w(Domain::prime_field(101), WeightedGrading({1, 1, 2}));
    CHECK(random_homogeneous(4, w, 3).size() <= monomials_of_degree(w, 4).size());
    CHECK(monomials_of_degree(w, 4).size() == 9);
  }

  TEST_CASE("derivatives and Jacobian generators") {
    const Ring r(3);
    const auto f = poly_parse("x0^3 + x0*x1*x2", r);
    CHECK(derivative(f, 0) == poly_parse("3*x0^2 + x1*x2", r));
    CHECK(derivative(f, 2) == poly_parse("x0*x1", r));
    // one equation: f and its three partials
    const std::vector<MultiPoly> one{f};
    const auto g = jacobian_generators(one);
    REQUIRE(g.size() == 4);
    CHECK(g[0] == f);
    // two equations in three variables: 2 + C(3,2) minors
    const std::vector<MultiPoly> two{poly_parse("x0", r), poly_parse("x1*x2", r)};
    CHECK(jacobian_generators(two).size() == 5);
  }

  TEST_CASE("Laplace determinant agrees with Leibniz") {
    const Ring r(4, Domain::prime_field(32003));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      for (std::size_t n : {2u, 3u, 4u}) {
        std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(r)));
        std::uint64_t s = 0;
        for (auto& row : m)
          for (auto& e : row) e = random_homogeneous(1, r, derive_seed(seed, s++));
        CHECK(determinant(m) == oracle::leibniz_det(m));
      }
    }
  }

  TEST_CASE("evaluate and homogenize") {
    const Ring r2(2), r3(3);
    const auto f = poly_parse("x0^2 + x1 + 1", r2);
    const std::vector<MultiPoly> images{poly_parse("x1", r2), poly_parse("x0", r2)};
    CHECK(evaluate(f, images, r2) == poly_parse("x1^2 + x0 + 1", r2));
    CHECK(homogenize(f, r3) == poly_parse("x0^2 + x1*x2 + x2^2", r3));
  }

  TEST_CASE("field sampler is uniform-ish and seeded") {
    FieldSampler a(7, 5), b(7, 5);
    std::vector<int> hist(7, 0);
    for (int i = 0; i < 7000; ++i) {
      const auto v = a.next();
      REQUIRE(v == b.next());
      ++hist[v];
    }
    for (int h : hist) CHECK(h > 800);
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  }
}
