#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cyc/algebra/coefficient.hpp"
#include "cyc/error.hpp"

namespace cyc::series {

/// Univariate polynomial in t with exact integer coefficients; the zero
/// polynomial is the empty coefficient vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  /// 1 - t^a
  static IntPolynomial one_minus_power(int a);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);

  const std::vector<Integer>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  Integer operator[](std::size_t i) const;
  Integer evaluate(const Integer& t) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coefficients_;
};

/// Numerator over a factored denominator prod_i (1 - t^{a_i}).
class RationalSeries {
 public:
  RationalSeries() = default;
  RationalSeries(IntPolynomial numerator, std::vector<int> denominator);

  const IntPolynomial& numerator() const { return numerator_; }
  /// Sorted multiset {a_i}.
  const std::vector<int>& denominator() const { return denominator_; }
  IntPolynomial expanded_denominator() const;

  /// Representational equality; use series_equal for equality of functions.
  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  IntPolynomial numerator_;
  std::vector<int> denominator_;
};

/// Ambient weights w_i and hypersurface degrees d_j of a weighted complete
/// intersection.
struct HilbertData {
  std::vector<int> weights;
  std::vector<int> degrees;

  /// Throws std::invalid_argument on empty weights or non-positive entries.
  void validate() const;
  int dimension() const { return static_cast<int>(weights.size() - degrees.size()) - 1; }
};

RationalSeries ci_hilbert_series(const HilbertData& h);

/// Exact Taylor coefficients c_0..c_N.
std::vector<Integer> series_coefficients(const RationalSeries& s, int N);

/// Equality as rational functions, by polynomial cross-multiplication.
bool series_equal(const RationalSeries& a, const RationalSeries& b);

class NotPolynomial : public Error {
 public:
  NotPolynomial(const std::string& what, long remainder_degree)
      : Error(what), remainder_degree_(remainder_degree) {}
  long remainder_degree() const { return remainder_degree_; }

 private:
  long remainder_degree_;
};

/// The polynomial s * (1-t)^k. Throws NotPolynomial if it is not one.
IntPolynomial numerator_over_standard(const RationalSeries& s, int k);

/// Degree of a dim-dimensional projective scheme with Hilbert series s.
Integer image_degree(const RationalSeries& s, int dim);

/// c_1 - 1: the projective dimension spanned by the degree-one piece.
Integer embedding_dimension(const RationalSeries& s);

/// Series of the k-th Veronese subring: coefficients c_0, c_k, c_2k, ...
RationalSeries veronese(const RationalSeries& s, int k);

/// Euler characteristic of O_F(nH) on an index-two Fano threefold with
/// H^3 = r; the cubic polynomial in n, valid for every integer n.
Integer riemann_roch_fano(int r, long n);

/// h^0(O_X(nG)) for the double-cover construction over a degree-r del Pezzo.
Integer section_dims_construction1(int r, long n);

/// Series sum h^0(nL) t^n of a Calabi-Yau threefold polarized by L with
/// L^3 = l3 and c2.L = c2l, using h^0(nL) = n^3 l3/6 + n c2l/12 for n >= 1.
/// Throws DomainError if the values are not integral.
RationalSeries cy3_series(const Integer& l3, const Integer& c2l);

/// delta = h^0(I(5)) - h^0(O(5)) + mu on P^4, given HF(5) of the node scheme.
Integer defect_quintic(const Integer& node_ideal_hf5, const Integer& mu);

/// delta = dim I_d - h^0(O(d)) + mu for any ambient degree d.
Integer defect(const Integer& ideal_dim_d, const Integer& ambient_dim_d, const Integer& mu);

/// `1 2 3 2 1 || 1,1,1,1,1,1`
std::string to_string(const RationalSeries& s);
RationalSeries parse_series(std::string_view text);

/// {"numerator": [...], "denominator": [...], "coefficients": [c_0..c_N]}
nlohmann::json to_json(const RationalSeries& s, int N);

}  // namespace cyc::series
