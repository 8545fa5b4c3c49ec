#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyc/algebra/coefficient.hpp"
#include "cyc/algebra/ring.hpp"

namespace cyc::algebra {

/// Sparse polynomial: a map from monomials to nonzero coefficients, ordered
/// largest-first in grevlex. Zero coefficients are never stored, so the term
/// map is a canonical form.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Coefficient, GrevlexDescending>;

  explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(const Ring& ring, const Coefficient& c);
  static MultiPoly constant(const Ring& ring, std::int64_t c);
  static MultiPoly variable(const Ring& ring, std::size_t index);
  static MultiPoly term(const Ring& ring, const Coefficient& c, Monomial m);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of m, zero if absent.
  Coefficient coefficient(const Monomial& m) const;
  /// Largest term in grevlex; requires a nonzero polynomial.
  const std::pair<const Monomial, Coefficient>& leading_term() const;
  std::uint64_t total_degree() const;

  /// Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Coefficient& c);

  MultiPoly operator-() const;
  MultiPoly scaled(const Coefficient& c) const;
  MultiPoly times_monomial(const Monomial& m) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& b);
  MultiPoly& operator-=(const MultiPoly& b);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  Ring ring_;
  TermMap terms_;
};

/// Parses `poly := term (('+'|'-') term)*` over the given ring; a leading
/// sign is accepted. Throws ParseError (with position), or DomainError when
/// a coefficient does not live in the ring's domain.
MultiPoly poly_parse(std::string_view text, const Ring& ring);

/// Canonical text: grevlex term order, unit coefficients elided.
std::string to_string(const MultiPoly& f);

enum class ArithOp { add, sub, mul };

/// Throws RingMismatch when the operands' rings differ.
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op);

/// Common weighted degree of all terms. Throws std::invalid_argument on the
/// zero polynomial and NotHomogeneous (naming two offending terms) otherwise.
std::int64_t weighted_degree(const MultiPoly& f, const WeightedGrading& grading);
std::int64_t weighted_degree(const MultiPoly& f);
bool is_homogeneous(const MultiPoly& f);

/// Polynomial whose coefficient on every monomial of weighted degree d is
/// drawn uniformly from the prime field. Deterministic in (d, ring, seed).
MultiPoly random_homogeneous(std::int64_t d, const Ring& ring, std::uint64_t seed);

/// Uniform residues in [0, p) by rejection sampling from mt19937_64, so the
/// stream is identical on every standard library.
class FieldSampler {
 public:
  FieldSampler(std::uint32_t p, std::uint64_t seed);
  std::uint32_t next();
  /// Like next() but never zero.
  std::uint32_t next_nonzero();

 private:
  std::uint32_t p_;
  std::mt19937_64 engine_;
};

/// Mixes a base seed with a stream index into an independent seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

MultiPoly derivative(const MultiPoly& f, std::size_t var);

/// Determinant by Laplace expansion along the first row.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& matrix);

/// The polynomials themselves followed by every maximal (k x k) minor of
/// their k x n Jacobian matrix, columns chosen in lexicographic order.
std::vector<MultiPoly> jacobian_generators(std::span<const MultiPoly> fs);

/// Ring homomorphism x_i -> images[i]; every image must live in `target`.
MultiPoly evaluate(const MultiPoly& f, std::span<const MultiPoly> images, const Ring& target);

/// Homogenizes f with respect to a new last variable of `target`, which
/// must have one more variable than f's ring and standard grading.
MultiPoly homogenize(const MultiPoly& f, const Ring& target);

}  // namespace cyc::algebra
