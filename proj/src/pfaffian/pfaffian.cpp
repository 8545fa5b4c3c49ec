#include "cyc/pfaffian/pfaffian.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cyc/error.hpp"

namespace cyc::pfaffian {

SkewMatrix::SkewMatrix(Ring ring, std::size_t n)
    : ring_(std::move(ring)), n_(n), upper_(n * (n > 0 ? n - 1 : 0) / 2, MultiPoly(ring_)) {}

std::size_t SkewMatrix::index(std::size_t i, std::size_t j) const {
  // row-major position of (i, j), i < j, in the strict upper triangle
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

MultiPoly SkewMatrix::entry(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("skew matrix index out of range");
  if (i == j) return MultiPoly(ring_);
  if (i < j) return upper_[index(i, j)];
  return -upper_[index(j, i)];
}

void SkewMatrix::set(std::size_t i, std::size_t j, MultiPoly value) {
  if (i >= n_ || j >= n_) throw std::out_of_range("skew matrix index out of range");
  if (i == j) throw std::invalid_argument("diagonal of a skew matrix is zero");
  if (!(value.ring() == ring_)) throw RingMismatch("skew matrix entry from another ring");
  if (i < j)
    upper_[index(i, j)] = std::move(value);
  else
    upper_[index(j, i)] = -value;
}

SkewMatrix SkewMatrix::restricted(const std::vector<std::size_t>& indices) const {
  SkewMatrix s(ring_, indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a + 1; b < indices.size(); ++b) s.set(a, b, entry(indices[a], indices[b]));
  return s;
}

std::vector<std::vector<MultiPoly>> SkewMatrix::dense() const {
  std::vector<std::vector<MultiPoly>> d(n_, std::vector<MultiPoly>(n_, MultiPoly(ring_)));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) d[i][j] = entry(i, j);
  return d;
}

std::string SkewMatrix::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const auto& e = upper_[index(i, j)];
      if (!e.is_zero())
        out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " : " + algebra::to_string(e) + "\n";
    }
  return out;
}

SkewMatrix SkewMatrix::parse(std::string_view text, const Ring& ring, std::size_t n) {
  SkewMatrix s(ring, n);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t here = offset;
    offset += line.size() + 1;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'i j : poly'", here);
    std::istringstream idx(line.substr(0, colon));
    std::size_t i = 0, j = 0;
    std::string extra;
    if (!(idx >> i >> j) || (idx >> extra) || i < 1 || j < 1 || i > n || j > n || i == j)
      throw ParseError("bad entry indices", here);
    s.set(i - 1, j - 1, algebra::poly_parse(std::string_view(line).substr(colon + 1), ring));
  }
  return s;
}

SkewMatrix random_linear_skew(const Ring& ring, std::size_t n, std::uint64_t seed) {
  SkewMatrix s(ring, n);
  std::uint64_t stream = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      s.set(i, j, algebra::random_homogeneous(1, ring, algebra::derive_seed(seed, stream++)));
  return s;
}

namespace {

class Expander {
 public:
  explicit Expander(const SkewMatrix& s) : s_(s) {}

  // Pfaffian of the principal submatrix on the bits of mask, first-row rule.
  MultiPoly pf(std::uint32_t mask) {
    if (mask == 0) return MultiPoly::constant(s_.ring(), 1);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < s_.size(); ++i)
      if (mask >> i & 1u) idx.push_back(i);
    MultiPoly sum(s_.ring());
    const std::size_t first = idx[0];
    for (std::size_t pos = 1; pos < idx.size(); ++pos) {
      const auto e = s_.entry(first, idx[pos]);
      if (e.is_zero()) continue;
      const std::uint32_t rest = mask & ~(1u << first) & ~(1u << idx[pos]);
      auto term = e * pf(rest);
      // 1-based column position pos+1, sign (-1)^(pos+1)
      if (pos % 2 == 0) term = -term;
      sum += term;
    }
    memo_.emplace(mask, sum);
    return sum;
  }

 private:
  const SkewMatrix& s_;
  std::unordered_map<std::uint32_t, MultiPoly> memo_;
};

void require_small(const SkewMatrix& s) {
  if (s.size() > 31) throw std::invalid_argument("Pfaffian: matrix too large");
}

std::uint32_t full_mask(std::size_t n) { return n == 0 ? 0u : ((1u << n) - 1u); }

}  // namespace

MultiPoly pfaffian(const SkewMatrix& s) {
  require_small(s);
  if (s.size() % 2) throw std::invalid_argument("Pfaffian of an odd-size matrix");
  return Expander(s).pf(full_mask(s.size()));
}

MultiPoly pfaffian_along_row(const SkewMatrix& s, std::size_t row) {
  require_small(s);
  if (s.size() % 2) throw std::invalid_argument("Pfaffian of an odd-size matrix");
  if (row >= s.size()) throw std::out_of_range("row out of range");
  Expander ex(s);
  MultiPoly sum(s.ring());
  // pf = sum_{j != i} (-1)^{i+j+1+[i>j]} a_ij pf(A without i, j), 1-based i, j
  const std::size_t i = row + 1;
  for (std::size_t col = 0; col < s.size(); ++col) {
    if (col == row) continue;
    const std::size_t j = col + 1;
    auto term = s.entry(row, col) * ex.pf(full_mask(s.size()) & ~(1u << row) & ~(1u << col));
    if ((i + j + 1 + (i > j ? 1 : 0)) % 2) term = -term;
    sum += term;
  }
  return sum;
}

std::vector<MultiPoly> maximal_sub_pfaffians(const SkewMatrix& s) {
  require_small(s);
  if (s.size() % 2 == 0) throw std::invalid_argument("maximal sub-Pfaffians need odd size");
  Expander ex(s);
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(ex.pf(full_mask(s.size()) & ~(1u << i)));
  return out;
}

BorderedPfaffian build_bordered(const SkewMatrix& block, std::vector<MultiPoly> l,
                                std::vector<MultiPoly> t, MultiPoly corner) {
  if (block.size() != 5 || l.size() != 5 || t.size() != 5)
    throw std::invalid_argument("bordered matrix needs a 5x5 block and five forms per border");
  const Ring& ring = block.ring();
  auto check_linear = [&](const MultiPoly& f, const char* what) {
    if (!(f.ring() == ring)) throw RingMismatch(std::string(what) + " from another ring");
    if (!f.is_zero() && algebra::weighted_degree(f) != 1)
      throw std::invalid_argument(std::string(what) + " must be linear");
  };
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) check_linear(block.entry(i, j), "block entry");
  for (const auto& f : l) check_linear(f, "border form");
  for (const auto& f : t) check_linear(f, "border form");
  if (!(corner.ring() == ring)) throw RingMismatch("corner from another ring");

  SkewMatrix n(ring, 7);
  n.set(0, 1, corner);
  for (std::size_t k = 0; k < 5; ++k) {
    n.set(0, k + 2, t[k]);
    n.set(1, k + 2, l[k]);
    for (std::size_t m = k + 1; m < 5; ++m) n.set(k + 2, m + 2, block.entry(k, m));
  }
  return {block, std::move(l), std::move(t), std::move(corner), std::move(n)};
}

BorderedPfaffian random_bordered(const Ring& ring, std::uint64_t seed) {
  auto block = random_linear_skew(ring, 5, algebra::derive_seed(seed, 0));
  std::vector<MultiPoly> l, t;
  for (std::uint64_t k = 0; k < 5; ++k) {
    l.push_back(algebra::random_homogeneous(1, ring, algebra::derive_seed(seed, 100 + k)));
    t.push_back(algebra::random_homogeneous(1, ring, algebra::derive_seed(seed, 200 + k)));
  }
  return build_bordered(block, std::move(l), std::move(t), MultiPoly(ring));
}

namespace {

// First sign vector making target == sum s_k f_k p_k, or all zeros.
std::array<int, 5> match_signs(const MultiPoly& target, const std::vector<MultiPoly>& f,
                               const std::vector<MultiPoly>& p) {
  std::vector<MultiPoly> prods;
  for (std::size_t k = 0; k < 5; ++k) prods.push_back(f[k] * p[k]);
  for (unsigned bits = 0; bits < 32; ++bits) {
    MultiPoly sum(target.ring());
    for (std::size_t k = 0; k < 5; ++k) {
      if (bits >> k & 1u)
        sum -= prods[k];
      else
        sum += prods[k];
    }
    if (sum == target) {
      std::array<int, 5> s{};
      for (std::size_t k = 0; k < 5; ++k) s[k] = (bits >> k & 1u) ? -1 : 1;
      return s;
    }
  }
  return {};
}

}  // namespace

ExpansionReport expansion_identity_check(const BorderedPfaffian& n) {
  if (n.matrix.size() != 7 || n.block.size() != 5)
    throw std::invalid_argument("expansion check needs a bordered 7x7 matrix");
  const auto big = maximal_sub_pfaffians(n.matrix);
  const auto small = maximal_sub_pfaffians(n.block);
  ExpansionReport r;
  r.l_signs = match_signs(big[0], n.l, small);
  r.t_signs = match_signs(big[1], n.t, small);
  r.holds = r.l_signs[0] != 0 && r.t_signs[0] != 0;
  return r;
}

}  // namespace cyc::pfaffian
