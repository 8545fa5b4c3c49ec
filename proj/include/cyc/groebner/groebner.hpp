#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "cyc/algebra/poly.hpp"

namespace cyc::groebner {

using algebra::Monomial;
using algebra::MultiPoly;
using algebra::Ring;

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
/// Largest variable count the engine accepts.
inline constexpr std::size_t kMaxVariables = 16;

enum class OrderKind { grevlex, grlex, lex };

/// A monomial order on x0..x(n-1). `permutation[k]` is the variable that
/// plays the role of the k-th variable of the plain order, so the identity
/// permutation makes x0 the largest variable.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation);
  static MonomialOrder grevlex(std::size_t n);
  static MonomialOrder grlex(std::size_t n);
  static MonomialOrder lex(std::size_t n);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& permutation() const { return permutation_; }
  std::size_t variables() const { return permutation_.size(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_;
  std::vector<std::size_t> permutation_;
};

namespace detail {
struct Basis;
}

/// Reduced Groebner basis over GF(p): monic generators sorted by decreasing
/// leading monomial.
class GroebnerBasis {
 public:
  const Ring& ring() const;
  const MonomialOrder& order() const;
  const std::vector<MultiPoly>& generators() const;
  std::vector<Monomial> leading_monomials() const;
  bool reduced() const { return true; }
  bool is_unit() const;

  /// Internal representation, shared by copies.
  const detail::Basis& internal() const { return *impl_; }

 private:
  friend GroebnerBasis buchberger(std::span<const MultiPoly>, const MonomialOrder&, std::uint64_t);
  explicit GroebnerBasis(std::shared_ptr<const detail::Basis> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::Basis> impl_;
};

/// Throws DomainError over the rationals, std::invalid_argument on an empty
/// generator list or too many variables, RingMismatch on mixed rings and
/// BudgetExceeded when more than `budget` reduction steps are needed.
GroebnerBasis buchberger(std::span<const MultiPoly> gens, const MonomialOrder& order,
                         std::uint64_t budget = kDefaultBudget);

/// Fully reduced remainder; zero iff f lies in the ideal.
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& g);

/// Every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const GroebnerBasis& g);

/// Monomials outside the leading-term ideal. Throws std::invalid_argument
/// unless the ideal is zero-dimensional.
std::vector<Monomial> standard_monomials(const GroebnerBasis& g);
std::uint64_t quotient_degree(const GroebnerBasis& g);

/// Dimension of the degree-d piece of the homogeneous ideal spanned by gens.
/// Throws NotHomogeneous on an inhomogeneous generator.
std::uint64_t graded_piece_dim(std::span<const MultiPoly> gens, std::int64_t d);

/// True iff a seeded random linear form has a squarefree minimal polynomial of
/// degree quotient_degree(g) on the quotient algebra.
bool separability_check(const GroebnerBasis& g, std::uint64_t seed);

/// Rank of a dense matrix over GF(p); rows are modified.
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p);

}  // namespace cyc::groebner
