#include "cyc/algebra/poly.hpp"

#include <cctype>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cyc/error.hpp"

namespace cyc::algebra {

MultiPoly MultiPoly::constant(const Ring& ring, const Coefficient& c) {
  return term(ring, c, Monomial(ring.variables()));
}

MultiPoly MultiPoly::constant(const Ring& ring, std::int64_t c) {
  return constant(ring, Coefficient::from_integer(c, ring.domain()));
}

MultiPoly MultiPoly::variable(const Ring& ring, std::size_t index) {
  if (index >= ring.variables())
    throw std::out_of_range("variable x" + std::to_string(index) + " not in " + ring.to_string());
  return term(ring, Coefficient::one(ring.domain()), Monomial::variable(ring.variables(), index));
}

MultiPoly MultiPoly::term(const Ring& ring, const Coefficient& c, Monomial m) {
  MultiPoly f(ring);
  f.add_term(m, c);
  return f;
}

Coefficient MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient::zero(ring_.domain()) : it->second;
}

const std::pair<const Monomial, Coefficient>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return *terms_.begin();
}

std::uint64_t MultiPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void MultiPoly::add_term(const Monomial& m, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
  return r;
}

MultiPoly MultiPoly::scaled(const Coefficient& c) const {
  MultiPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, a * c);
  return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m) const {
  // Multiplying by a monomial preserves the grevlex order of the terms.
  MultiPoly r(ring_);
  for (const auto& [t, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * m, a);
  return r;
}

namespace {

void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.ring() == b.ring()))
    throw RingMismatch("ring mismatch: " + a.ring().to_string() + " vs " + b.ring().to_string());
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& b) {
  require_same_ring(*this, b);
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& b) {
  require_same_ring(*this, b);
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r += b;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r -= b;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b);
  MultiPoly r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  throw std::logic_error("unknown ArithOp");
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  MultiPoly parse() {
    MultiPoly result(ring_);
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      MultiPoly t = parse_term();
      result += negative ? -t : t;
      skip_ws();
      if (pos_ == text_.size()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Integer parse_uint() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
    Integer n = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) n = n * 10 + (text_[pos_++] - '0');
    return n;
  }

  MultiPoly parse_term() {
    skip_ws();
    Coefficient coeff = Coefficient::one(ring_.domain());
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = parse_uint();
      Rational q(num);
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        Integer den = parse_uint();
        if (den == 0) throw ParseError("zero denominator", at);
        q = Rational(num, den);
      }
      coeff = Coefficient::from_rational(q, ring_.domain());
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'x') fail("expected variable after '*'");
      } else if (peek() != 'x') {
        return MultiPoly::constant(ring_, coeff);
      }
    }
    Monomial m(ring_.variables());
    parse_factor(m);
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      parse_factor(m);
    }
    return MultiPoly::term(ring_, coeff, m);
  }

  void parse_factor(Monomial& m) {
    skip_ws();
    if (peek() != 'x') fail("expected variable");
    const std::size_t at = pos_;
    ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
    Integer index = parse_uint();
    if (index >= ring_.variables())
      throw ParseError("variable x" + index.str() + " out of range for " + ring_.to_string(), at);
    Integer power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      power = parse_uint();
    }
    const auto i = index.convert_to<std::size_t>();
    if (power > 0xFFFFFFu - m[i]) throw ParseError("exponent too large", at);
    m[i] += power.convert_to<std::uint32_t>();
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

MultiPoly poly_parse(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Coefficient mag = c;
    bool negative = false;
    if (c.domain().is_rational() && c.rational() < 0) {
      negative = true;
      mag = -c;
    }
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    const std::string mono = monomial_text(m);
    if (mono.empty()) {
      s += mag.to_string();
    } else {
      if (!mag.is_one()) s += mag.to_string() + "*";
      s += mono;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Degrees and generic polynomials

std::int64_t weighted_degree(const MultiPoly& f, const WeightedGrading& grading) {
  if (f.is_zero()) throw std::invalid_argument("weighted degree of the zero polynomial");
  if (grading.size() != f.ring().variables())
    throw RingMismatch("grading has " + std::to_string(grading.size()) + " weights for " +
                       f.ring().to_string());
  const auto& [m0, c0] = f.leading_term();
  const std::int64_t d = grading.degree(m0);
  for (const auto& [m, c] : f.terms()) {
    if (grading.degree(m) != d) {
      MultiPoly a = MultiPoly::term(f.ring(), c0, m0);
      MultiPoly b = MultiPoly::term(f.ring(), c, m);
      throw NotHomogeneous("non-homogeneous polynomial: terms " + to_string(a) + " (degree " +
                           std::to_string(d) + ") and " + to_string(b) + " (degree " +
                           std::to_string(grading.degree(m)) + ")");
    }
  }
  return d;
}

std::int64_t weighted_degree(const MultiPoly& f) { return weighted_degree(f, f.ring().grading()); }

bool is_homogeneous(const MultiPoly& f) {
  if (f.is_zero()) return true;
  const auto& g = f.ring().grading();
  const std::int64_t d = g.degree(f.leading_term().first);
  for (const auto& [m, c] : f.terms())
    if (g.degree(m) != d) return false;
  return true;
}

FieldSampler::FieldSampler(std::uint32_t p, std::uint64_t seed) : p_(p), engine_(seed) {}

std::uint32_t FieldSampler::next() {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % p_;
  for (;;) {
    std::uint64_t r = engine_();
    if (r < limit) return static_cast<std::uint32_t>(r % p_);
  }
}

std::uint32_t FieldSampler::next_nonzero() {
  for (;;)
    if (auto v = next(); v != 0) return v;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

MultiPoly random_homogeneous(std::int64_t d, const Ring& ring, std::uint64_t seed) {
  if (!ring.domain().is_prime_field())
    throw DomainError("random_homogeneous needs a prime field, got " + ring.domain().to_string());
  if (d < 0) throw std::invalid_argument("negative degree");
  const std::uint32_t p = ring.domain().prime();
  FieldSampler sampler(p, seed);
  MultiPoly f(ring);
  for (const Monomial& m : monomials_of_degree(ring, d))
    f.add_term(m, Coefficient::residue(sampler.next(), p));
  return f;
}

// ---------------------------------------------------------------------------
// Calculus and substitutions

MultiPoly derivative(const MultiPoly& f, std::size_t var) {
  if (var >= f.ring().variables()) throw std::out_of_range("derivative variable out of range");
  MultiPoly r(f.ring());
  const Domain& dom = f.ring().domain();
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    dm[var] -= 1;
    r.add_term(dm, c * Coefficient::from_integer(m[var], dom));
  }
  return r;
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : matrix)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 1) return matrix[0][0];
  if (n == 2) return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
  MultiPoly det(matrix[0][0].ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (matrix[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(matrix[i][k]);
      minor.push_back(std::move(row));
    }
    MultiPoly t = matrix[0][j] * determinant(minor);
    det += (j % 2 == 0) ? t : -t;
  }
  return det;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, std::vector<std::size_t>& chosen,
                     std::size_t start, const auto& visit) {
  if (chosen.size() == k) {
    visit(chosen);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    chosen.push_back(i);
    for_each_subset(n, k, chosen, i + 1, visit);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<MultiPoly> jacobian_generators(std::span<const MultiPoly> fs) {
  if (fs.empty()) throw std::invalid_argument("jacobian_generators needs at least one polynomial");
  const Ring& ring = fs[0].ring();
  for (const auto& f : fs)
    if (!(f.ring() == ring)) throw RingMismatch("jacobian_generators: polynomials in different rings");
  const std::size_t k = fs.size(), n = ring.variables();
  if (k > n)
    throw std::invalid_argument("jacobian_generators: more polynomials than variables");

  std::vector<std::vector<MultiPoly>> jac(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i].push_back(derivative(fs[i], j));

  std::vector<MultiPoly> out(fs.begin(), fs.end());
  std::vector<std::size_t> cols;
  for_each_subset(n, k, cols, 0, [&](const std::vector<std::size_t>& chosen) {
    std::vector<std::vector<MultiPoly>> minor(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c : chosen) minor[i].push_back(jac[i][c]);
    out.push_back(determinant(minor));
  });
  return out;
}

MultiPoly evaluate(const MultiPoly& f, std::span<const MultiPoly> images, const Ring& target) {
  const std::size_t n = f.ring().variables();
  if (images.size() != n) throw std::invalid_argument("evaluate: wrong number of images");
  if (!(f.ring().domain() == target.domain()))
    throw RingMismatch("evaluate: coefficient domains differ");
  for (const auto& g : images)
    if (!(g.ring() == target)) throw RingMismatch("evaluate: image outside the target ring");

  // powers[i][e] = images[i]^e, grown on demand
  std::vector<std::vector<MultiPoly>> powers(n);
  for (std::size_t i = 0; i < n; ++i) powers[i].push_back(MultiPoly::constant(target, 1));
  auto power = [&](std::size_t i, std::uint32_t e) -> const MultiPoly& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][e];
  };

  MultiPoly result(target);
  for (const auto& [m, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < n && !t.is_zero(); ++i)
      if (m[i] != 0) t = t * power(i, m[i]);
    result += t;
  }
  return result;
}

MultiPoly homogenize(const MultiPoly& f, const Ring& target) {
  const std::size_t n = f.ring().variables();
  if (target.variables() != n + 1 || !target.grading().is_standard() ||
      !f.ring().grading().is_standard() || !(target.domain() == f.ring().domain()))
    throw RingMismatch("homogenize: target ring must add one standard-graded variable");
  MultiPoly r(target);
  const std::uint64_t d = f.total_degree();
  for (const auto& [m, c] : f.terms()) {
    Monomial h(n + 1);
    for (std::size_t i = 0; i < n; ++i) h[i] = m[i];
    h[n] = static_cast<std::uint32_t>(d - m.degree());
    r.add_term(h, c);
  }
  return r;
}

}  // namespace cyc::algebra
