#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyc/error.hpp"

namespace cyc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace algebra {

class Coefficient;

/// Coefficient domain of a polynomial ring: either the rationals or a prime
/// field GF(p) with p < 2^31.
class Domain {
 public:
  static Domain rationals() { return Domain(0); }
  /// Throws DomainError unless p is a prime below 2^31.
  static Domain prime_field(std::uint32_t p);

  bool is_rational() const { return prime_ == 0; }
  bool is_prime_field() const { return prime_ != 0; }
  std::uint32_t prime() const { return prime_; }

  std::string to_string() const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  friend class Coefficient;
  explicit Domain(std::uint32_t p) : prime_(p) {}
  std::uint32_t prime_;
};

/// Default prime for finite-field computations.
inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t n);

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

/// A field element: an exact rational kept in lowest terms, or a residue in
/// [0, p). Mixing domains in arithmetic throws DomainError.
class Coefficient {
 public:
  /// Rational zero.
  Coefficient() : value_(Rational(0)) {}
  explicit Coefficient(Rational q) : value_(std::move(q)) {}

  static Coefficient zero(const Domain& d);
  static Coefficient one(const Domain& d);
  static Coefficient from_integer(const Integer& n, const Domain& d);
  /// Throws DomainError when the denominator vanishes modulo p.
  static Coefficient from_rational(const Rational& q, const Domain& d);
  static Coefficient residue(std::uint64_t value, std::uint32_t p);

  Domain domain() const;
  bool is_zero() const;
  bool is_one() const;

  const Rational& rational() const;
  std::uint32_t residue_value() const;

  Coefficient operator-() const;
  Coefficient inverse() const;

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b);
  friend bool operator==(const Coefficient& a, const Coefficient& b);

  /// Rationals print as "n" or "n/d"; residues print in [0, p).
  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  explicit Coefficient(Residue r) : value_(r) {}

  std::variant<Rational, Residue> value_;
};

}  // namespace algebra
}  // namespace cyc
