#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyc/algebra/coefficient.hpp"

namespace cyc::algebra {

/// Exponent vector over the ring's variables x0..x(n-1).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exponents_[i]; }
  std::span<const std::uint32_t> exponents() const { return exponents_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Graded reverse lexicographic comparison with x0 > x1 > ... by total degree.
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

/// Orders terms from largest to smallest in grevlex, the canonical print order.
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) == std::strong_ordering::greater;
  }
};

class WeightedGrading {
 public:
  /// Throws std::invalid_argument if some weight is < 1.
  explicit WeightedGrading(std::vector<int> weights);
  static WeightedGrading standard(std::size_t nvars);

  std::size_t size() const { return weights_.size(); }
  const std::vector<int>& weights() const { return weights_; }
  bool is_standard() const;
  std::int64_t degree(const Monomial& m) const;

  friend bool operator==(const WeightedGrading&, const WeightedGrading&) = default;

 private:
  std::vector<int> weights_;
};

/// Polynomial ring descriptor: variable count, coefficient domain, grading.
class Ring {
 public:
  explicit Ring(std::size_t nvars, Domain domain = Domain::rationals());
  Ring(Domain domain, WeightedGrading grading);

  std::size_t variables() const { return grading_.size(); }
  const Domain& domain() const { return domain_; }
  const WeightedGrading& grading() const { return grading_; }

  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Domain domain_;
  WeightedGrading grading_;
};

/// All monomials of weighted degree d, largest first in grevlex.
std::vector<Monomial> monomials_of_degree(const Ring& ring, std::int64_t d);

}  // namespace cyc::algebra
