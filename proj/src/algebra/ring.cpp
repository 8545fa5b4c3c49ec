#include "cyc/algebra/ring.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cyc::algebra {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exponents_.at(index) = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exponents_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  assert(size() == other.size());
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  Monomial r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.exponents_[i] += b.exponents_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  assert(b.divides(a));
  Monomial r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.exponents_[i] -= b.exponents_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r.exponents_[i] = std::max(a.exponents_[i], b.exponents_[i]);
  return r;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

WeightedGrading::WeightedGrading(std::vector<int> weights) : weights_(std::move(weights)) {
  for (int w : weights_)
    if (w < 1) throw std::invalid_argument("grading weights must be >= 1");
}

WeightedGrading WeightedGrading::standard(std::size_t nvars) {
  return WeightedGrading(std::vector<int>(nvars, 1));
}

bool WeightedGrading::is_standard() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

std::int64_t WeightedGrading::degree(const Monomial& m) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    d += static_cast<std::int64_t>(weights_[i]) * m[i];
  return d;
}

Ring::Ring(std::size_t nvars, Domain domain)
    : domain_(domain), grading_(WeightedGrading::standard(nvars)) {}

Ring::Ring(Domain domain, WeightedGrading grading)
    : domain_(domain), grading_(std::move(grading)) {}

std::string Ring::to_string() const {
  std::string s = domain_.to_string() + "[x0..x" + std::to_string(variables() - 1) + "]";
  if (!grading_.is_standard()) {
    s += " weights (";
    for (std::size_t i = 0; i < grading_.size(); ++i)
      s += (i ? "," : "") + std::to_string(grading_.weights()[i]);
    s += ")";
  }
  return s;
}

namespace {

void enumerate(const std::vector<int>& weights, std::size_t index, std::int64_t remaining,
               Monomial& current, std::vector<Monomial>& out) {
  if (index + 1 == weights.size()) {
    if (remaining % weights[index] == 0) {
      current[index] = static_cast<std::uint32_t>(remaining / weights[index]);
      out.push_back(current);
      current[index] = 0;
    }
    return;
  }
  for (std::int64_t e = 0; e * weights[index] <= remaining; ++e) {
    current[index] = static_cast<std::uint32_t>(e);
    enumerate(weights, index + 1, remaining - e * weights[index], current, out);
  }
  current[index] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Ring& ring, std::int64_t d) {
  std::vector<Monomial> out;
  if (d < 0 || ring.variables() == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial current(ring.variables());
  enumerate(ring.grading().weights(), 0, d, current, out);
  std::sort(out.begin(), out.end(), GrevlexDescending{});
  return out;
}

}  // namespace cyc::algebra
