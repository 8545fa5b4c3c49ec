#include <doctest.h>

#include <random>

#include "cyc/pfaffian/pfaffian.hpp"
#include "oracles.hpp"

using namespace cyc;
using namespace cyc::algebra;
namespace pfm = cyc::pfaffian;
using pfm::SkewMatrix;

namespace {

SkewMatrix random_constant_skew(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(-9, 9);
  SkewMatrix s(ring, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s.set(i, j, MultiPoly::constant(ring, v(rng)));
  return s;
}

Coefficient constant_of(const MultiPoly& f) {
  return f.is_zero() ? Coefficient::zero(f.ring().domain()) : f.terms().begin()->second;
}

std::vector<std::vector<Coefficient>> numeric(const SkewMatrix& s) {
  std::vector<std::vector<Coefficient>> m;
  for (const auto& row : s.dense()) {
    m.emplace_back();
    for (const auto& e : row) m.back().push_back(constant_of(e));
  }
  return m;
}

}  // namespace

TEST_SUITE("pfaffian") {
  TEST_CASE("small cases") {
    const Ring r(6);
    SkewMatrix two(r, 2);
    two.set(0, 1, poly_parse("x0", r));
    CHECK(pfm::pfaffian(two) == poly_parse("x0", r));
    CHECK(pfm::pfaffian(SkewMatrix(r, 0)) == MultiPoly::constant(r, 1));
    SkewMatrix four(r, 4);
    four.set(0, 1, poly_parse("x0", r));  // s12
    four.set(0, 2, poly_parse("x1", r));  // s13
    four.set(0, 3, poly_parse("x2", r));  // s14
    four.set(1, 2, poly_parse("x3", r));  // s23
    four.set(1, 3, poly_parse("x4", r));  // s24
    four.set(2, 3, poly_parse("x5", r));  // s34
    CHECK(pfm::pfaffian(four) == poly_parse("x0*x5 - x1*x4 + x2*x3", r));
    CHECK_THROWS_AS(pfm::pfaffian(SkewMatrix(r, 3)), std::invalid_argument);
    CHECK(four.entry(3, 0) == -poly_parse("x2", r));
    CHECK(four.entry(2, 2).is_zero());
  }

  TEST_CASE("sub-Pfaffians of a 3x3") {
    const Ring r(3);
    SkewMatrix s(r, 3);
    s.set(0, 1, poly_parse("x0", r));
    s.set(0, 2, poly_parse("x1", r));
    s.set(1, 2, poly_parse("x2", r));
    const auto p = pfm::maximal_sub_pfaffians(s);
    REQUIRE(p.size() == 3);
    CHECK(p[0] == poly_parse("x2", r));
    CHECK(p[1] == poly_parse("x1", r));
    CHECK(p[2] == poly_parse("x0", r));
    CHECK_THROWS_AS(pfm::maximal_sub_pfaffians(SkewMatrix(r, 4)), std::invalid_argument);
  }

  TEST_CASE("pf^2 = det on numeric matrices") {
    std::mt19937_64 rng(99);
    int cases = 0;
    for (const auto& dom : {Domain::rationals(), Domain::prime_field(32003)}) {
      const Ring r(1, dom);
      for (std::size_t n : {2u, 4u, 6u})
        for (int t = 0; t < 30; ++t) {
          const auto s = random_constant_skew(r, n, rng);
          const auto pf = constant_of(pfm::pfaffian(s));
          CHECK(pf * pf == oracle::gauss_det(numeric(s), dom));
          ++cases;
        }
    }
    CHECK(cases >= 100);
  }

  TEST_CASE("pf^2 = det symbolically") {
    const Ring r(3, Domain::prime_field(32003));
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
      for (std::size_t n : {4u, 6u}) {
        const auto s = pfm::random_linear_skew(r, n, seed);
        const auto pf = pfm::pfaffian(s);
        CHECK(pf * pf == oracle::leibniz_det(s.dense()));
      }
  }

  TEST_CASE("scaling row and column i scales pf") {
    const Ring r(4, Domain::prime_field(32003));
    const auto s = pfm::random_linear_skew(r, 6, 5);
    const auto u = poly_parse("x0 + 2*x3", r);
    for (std::size_t i = 0; i < 6; ++i) {
      SkewMatrix t = s;
      for (std::size_t j = 0; j < 6; ++j)
        if (j != i) t.set(std::min(i, j), std::max(i, j), s.entry(std::min(i, j), std::max(i, j)) * u);
      CHECK(pfm::pfaffian(t) == pfm::pfaffian(s) * u);
    }
  }

  TEST_CASE("expansion along any row") {
    const Ring r(5, Domain::prime_field(32003));
    for (std::size_t n : {4u, 6u}) {
      const auto s = pfm::random_linear_skew(r, n, 17);
      for (std::size_t k = 0; k < n; ++k) CHECK(pfm::pfaffian_along_row(s, k) == pfm::pfaffian(s));
    }
  }

  TEST_CASE("text round trip") {
    const Ring r(6, Domain::prime_field(32003));
    const auto s = pfm::random_linear_skew(r, 5, 3);
    CHECK(SkewMatrix::parse(s.to_text(), r, 5) == s);
    CHECK_THROWS_AS(SkewMatrix::parse("1 1 : x0", r, 5), cyc::ParseError);
    CHECK_THROWS_AS(SkewMatrix::parse("1 9 : x0", r, 5), cyc::ParseError);
    CHECK_THROWS_AS(SkewMatrix::parse("1 2 x0", r, 5), cyc::ParseError);
  }

  TEST_CASE("5x5 generic linear block gives five quadrics") {
    const Ring r(6, Domain::prime_field(32003));
    const auto p = pfm::maximal_sub_pfaffians(pfm::random_linear_skew(r, 5, 8));
    REQUIRE(p.size() == 5);
    for (const auto& q : p) CHECK(weighted_degree(q) == 2);
  }

  TEST_CASE("bordered matrix") {
    const Ring r(6, Domain::prime_field(32003));
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto b = pfm::random_bordered(r, seed);
      const auto rep = pfm::expansion_identity_check(b);
      CHECK(rep.holds);
      CHECK(rep.l_signs == std::array<int, 5>{1, -1, 1, -1, 1});
      CHECK(rep.t_signs == std::array<int, 5>{1, -1, 1, -1, 1});
      const auto subs = pfm::maximal_sub_pfaffians(b.matrix);
      CHECK(weighted_degree(subs[0]) == 3);
      CHECK(weighted_degree(subs[1]) == 3);
      // perturbation control
      auto l = b.l;
      l[2] = l[2] + MultiPoly::variable(r, 0);
      pfm::BorderedPfaffian bad = b;
      bad.l = l;
      CHECK_FALSE(pfm::expansion_identity_check(bad).holds);
    }
  }

  TEST_CASE("bordered construction edge cases") {
    const Ring r(6, Domain::prime_field(32003));
    const auto block = pfm::random_linear_skew(r, 5, 4);
    std::vector<MultiPoly> l;
    for (std::size_t k = 0; k < 5; ++k) l.push_back(MultiPoly::variable(r, k));
    const auto same = pfm::build_bordered(block, l, l, MultiPoly(r));
    const auto subs = pfm::maximal_sub_pfaffians(same.matrix);
    CHECK(subs[0] == subs[1]);
    const auto zero = pfm::build_bordered(SkewMatrix(r, 5), l, l, MultiPoly(r));
    const auto zs = pfm::maximal_sub_pfaffians(zero.matrix);
    CHECK(zs[0].is_zero());
    CHECK(zs[1].is_zero());
    // a nonzero corner does not enter the two border Pfaffians
    const auto cornered = pfm::build_bordered(block, l, l, poly_parse("x5", r));
    CHECK(pfm::maximal_sub_pfaffians(cornered.matrix)[0] == subs[0]);
    CHECK_THROWS_AS(pfm::build_bordered(SkewMatrix(r, 4), l, l, MultiPoly(r)), std::invalid_argument);
    auto quad = l;
    quad[0] = quad[0] * quad[0];
    CHECK_THROWS_AS(pfm::build_bordered(block, quad, l, MultiPoly(r)), std::invalid_argument);
  }

  TEST_CASE("symbolic bordered matrix over the rationals") {
    // one fresh variable per entry: 10 block + 5 + 5 = 20 > 16 is fine outside Groebner
    const Ring r(20);
    SkewMatrix block(r, 5);
    std::size_t v = 0;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) block.set(i, j, MultiPoly::variable(r, v++));
    std::vector<MultiPoly> l, t;
    for (std::size_t k = 0; k < 5; ++k) l.push_back(MultiPoly::variable(r, v++));
    for (std::size_t k = 0; k < 5; ++k) t.push_back(MultiPoly::variable(r, v++));
    const auto b = pfm::build_bordered(block, l, t, MultiPoly(r));
    CHECK(pfm::expansion_identity_check(b).holds);
  }
}
