#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyc/algebra/poly.hpp"

namespace cyc::pfaffian {

using algebra::MultiPoly;
using algebra::Ring;

/// Skew-symmetric matrix over a polynomial ring. Only entries above the
/// diagonal are stored. Indices are 0-based in the API and 1-based in text.
class SkewMatrix {
 public:
  SkewMatrix(Ring ring, std::size_t n);

  std::size_t size() const { return n_; }
  const Ring& ring() const { return ring_; }

  /// entry(j, i) == -entry(i, j); the diagonal is zero.
  MultiPoly entry(std::size_t i, std::size_t j) const;
  /// Sets (i, j) and implicitly (j, i). Throws on i == j.
  void set(std::size_t i, std::size_t j, MultiPoly value);

  /// The submatrix on the given (increasing) indices.
  SkewMatrix restricted(const std::vector<std::size_t>& indices) const;
  std::vector<std::vector<MultiPoly>> dense() const;

  /// One `i j : poly` line per nonzero entry with i < j.
  std::string to_text() const;
  static SkewMatrix parse(std::string_view text, const Ring& ring, std::size_t n);

  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;
  Ring ring_;
  std::size_t n_;
  std::vector<MultiPoly> upper_;
};

/// Skew matrix whose upper entries are random linear forms (prime field).
SkewMatrix random_linear_skew(const Ring& ring, std::size_t n, std::uint64_t seed);

/// Expansion along the first row; pf([[0,a],[-a,0]]) = a. Throws
/// std::invalid_argument on odd size. The empty matrix has Pfaffian 1.
MultiPoly pfaffian(const SkewMatrix& s);

/// Expansion along row `row`; equal to pfaffian(s) by theory.
MultiPoly pfaffian_along_row(const SkewMatrix& s, std::size_t row);

/// p_i = pf of s with row and column i removed, no sign attached. Odd size only.
std::vector<MultiPoly> maximal_sub_pfaffians(const SkewMatrix& s);

/// 7x7 matrix bordering a 5x5 block by two rows of linear forms, together
/// with the inputs it was built from.
///
///   index 0: (0, corner, t_1..t_5)
///   index 1: (-corner, 0, l_1..l_5)
///   index 2..6: the block
struct BorderedPfaffian {
  SkewMatrix block;
  std::vector<MultiPoly> l;
  std::vector<MultiPoly> t;
  MultiPoly corner;
  SkewMatrix matrix;
};

/// Throws std::invalid_argument on size mismatch or non-linear border entries.
BorderedPfaffian build_bordered(const SkewMatrix& block, std::vector<MultiPoly> l,
                                std::vector<MultiPoly> t, MultiPoly corner);

/// Seeded generic instance: random linear block, borders and zero corner.
BorderedPfaffian random_bordered(const Ring& ring, std::uint64_t seed);

struct ExpansionReport {
  bool holds = false;
  /// Sign vectors s with P_first == sum s_k l_k p_k and P_second == sum s_k t_k p_k,
  /// where P_first drops index 0 and P_second drops index 1; zero when none fits.
  std::array<int, 5> l_signs{};
  std::array<int, 5> t_signs{};
};

/// Compares the two sub-Pfaffians of the stored matrix that drop a border row
/// against signed combinations of the stored borders and the block's
/// sub-Pfaffians, trying every sign vector.
ExpansionReport expansion_identity_check(const BorderedPfaffian& n);

}  // namespace cyc::pfaffian
