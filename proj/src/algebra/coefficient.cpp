#include "cyc/algebra/coefficient.hpp"

#include <utility>

#include "cyc/error.hpp"

namespace cyc::algebra {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Domain Domain::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw DomainError("modulus " + std::to_string(p) +
                      " is not a prime below 2^31");
  return Domain(p);
}

std::string Domain::to_string() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(prime_) + ")";
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  if (new_r == 0) throw DomainError("division by zero in GF(" + std::to_string(p) + ")");
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

namespace {

std::uint32_t reduce_integer(const Integer& n, std::uint32_t p) {
  Integer r = n % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint32_t>();
}

}  // namespace

Coefficient Coefficient::zero(const Domain& d) {
  if (d.is_rational()) return Coefficient(Rational(0));
  return Coefficient(Residue{0, d.prime()});
}

Coefficient Coefficient::one(const Domain& d) {
  if (d.is_rational()) return Coefficient(Rational(1));
  return Coefficient(Residue{1, d.prime()});
}

Coefficient Coefficient::from_integer(const Integer& n, const Domain& d) {
  if (d.is_rational()) return Coefficient(Rational(n));
  return Coefficient(Residue{reduce_integer(n, d.prime()), d.prime()});
}

Coefficient Coefficient::from_rational(const Rational& q, const Domain& d) {
  if (d.is_rational()) return Coefficient(q);
  const std::uint32_t p = d.prime();
  std::uint32_t den = reduce_integer(boost::multiprecision::denominator(q), p);
  if (den == 0)
    throw DomainError("denominator of " + q.str() + " vanishes in " + d.to_string());
  std::uint64_t num = reduce_integer(boost::multiprecision::numerator(q), p);
  return Coefficient(Residue{static_cast<std::uint32_t>(num * mod_inverse(den, p) % p), p});
}

Coefficient Coefficient::residue(std::uint64_t value, std::uint32_t p) {
  return Coefficient(Residue{static_cast<std::uint32_t>(value % p), p});
}

Domain Coefficient::domain() const {
  if (auto* r = std::get_if<Residue>(&value_)) return Domain(r->modulus);
  return Domain::rationals();
}

bool Coefficient::is_zero() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return std::get<Rational>(value_) == 0;
}

bool Coefficient::is_one() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<Rational>(value_) == 1;
}

const Rational& Coefficient::rational() const {
  if (auto* q = std::get_if<Rational>(&value_)) return *q;
  throw DomainError("coefficient is a residue, not a rational");
}

std::uint32_t Coefficient::residue_value() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw DomainError("coefficient is a rational, not a residue");
}

Coefficient Coefficient::operator-() const {
  if (auto* r = std::get_if<Residue>(&value_))
    return Coefficient(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  return Coefficient(Rational(-std::get<Rational>(value_)));
}

Coefficient Coefficient::inverse() const {
  if (auto* r = std::get_if<Residue>(&value_))
    return Coefficient(Residue{mod_inverse(r->value, r->modulus), r->modulus});
  const Rational& q = std::get<Rational>(value_);
  if (q == 0) throw DomainError("division by zero in QQ");
  return Coefficient(Rational(1) / q);
}

namespace {

template <typename RationalOp, typename ResidueOp>
Coefficient combine(const Coefficient& a, const Coefficient& b, RationalOp on_rational,
                    ResidueOp on_residue) {
  const Domain da = a.domain(), db = b.domain();
  if (!(da == db))
    throw DomainError("mixed coefficient domains " + da.to_string() + " and " + db.to_string());
  if (da.is_rational()) return Coefficient(on_rational(a.rational(), b.rational()));
  const std::uint64_t p = da.prime();
  return Coefficient::residue(on_residue(a.residue_value(), b.residue_value(), p), da.prime());
}

}  // namespace

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  return combine(
      a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); },
      [](std::uint64_t x, std::uint64_t y, std::uint64_t) { return x + y; });
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) {
  return combine(
      a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); },
      [](std::uint64_t x, std::uint64_t y, std::uint64_t p) { return x + p - y; });
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  return combine(
      a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); },
      [](std::uint64_t x, std::uint64_t y, std::uint64_t) { return x * y; });
}

Coefficient operator/(const Coefficient& a, const Coefficient& b) { return a * b.inverse(); }

bool operator==(const Coefficient& a, const Coefficient& b) { return a.value_ == b.value_; }

std::string Coefficient::to_string() const {
  if (auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<Rational>(value_).str();
}

}  // namespace cyc::algebra
