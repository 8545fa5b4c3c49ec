#pragma once

// Test-side reference computations. Deliberately naive and independent of the
// library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cyc/algebra/poly.hpp"

namespace oracle {

using cyc::Integer;
using cyc::algebra::Coefficient;
using cyc::algebra::MultiPoly;

// Leibniz sum over all permutations.
inline MultiPoly leibniz_det(const std::vector<std::vector<MultiPoly>>& a) {
  const std::size_t n = a.size();
  const auto& ring = a[0][0].ring();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly sum(ring);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    MultiPoly term = MultiPoly::constant(ring, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * a[i][perm[i]];
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

// Gaussian elimination with pivoting over a field of coefficients.
inline Coefficient gauss_det(std::vector<std::vector<Coefficient>> a, const cyc::algebra::Domain& d) {
  const std::size_t n = a.size();
  Coefficient det = Coefficient::one(d);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return Coefficient::zero(d);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det = det * a[c][c];
    const Coefficient inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const Coefficient f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] = a[r][k] - f * a[c][k];
    }
  }
  return det;
}

// Number of monomials of weighted degree n in the given weights (recursion on
// the last variable).
inline Integer count_monomials(const std::vector<int>& w, int n) {
  std::vector<Integer> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int wi : w)
    for (int k = wi; k <= n; ++k) ways[static_cast<std::size_t>(k)] += ways[static_cast<std::size_t>(k - wi)];
  return ways[static_cast<std::size_t>(n)];
}

// Hilbert function of a complete intersection: alternating sum over subsets of
// the degrees (Koszul complex).
inline Integer ci_hilbert_function(const std::vector<int>& w, const std::vector<int>& d, int n) {
  Integer total = 0;
  const std::size_t k = d.size();
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    int shift = 0, bits = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (mask & (1U << j)) {
        shift += d[j];
        ++bits;
      }
    if (shift > n) continue;
    const Integer c = count_monomials(w, n - shift);
    total += bits % 2 ? -c : c;
  }
  return total;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
