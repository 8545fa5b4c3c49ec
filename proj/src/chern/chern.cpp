#include "cyc/chern/chern.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cyc/algebra/poly.hpp"
#include "embedded_data.hpp"

namespace cyc::chern {

using algebra::Coefficient;
using algebra::Domain;
using algebra::Monomial;
using algebra::MultiPoly;
using algebra::Ring;
using algebra::WeightedGrading;

void FanoModel::validate() const {
  if (index < 1) throw std::invalid_argument("Fano index must be positive");
  if (H3 <= 0) throw std::invalid_argument("H^3 must be positive");
  if (Hc2 * index != 24) throw std::invalid_argument("index * H.c2 must equal 24");
}

FanoModel FanoModel::projective_space() { return {"P3", 4, 1, 6, 4}; }

FanoModel FanoModel::quadric() { return {"Q3", 3, 2, 8, 4}; }

FanoModel FanoModel::index_two(int r) {
  static const long long chi[] = {-38, -16, -6, 0, 4};
  if (r < 1 || r > 5) throw std::invalid_argument("index-two Fano degree must lie in 1..5");
  return {"F" + std::to_string(r), 2, r, 12, chi[r - 1]};
}

// ---------------------------------------------------------------------------

namespace {

using Truncated = std::vector<Rational>;  // coefficients of h^0..h^n

Truncated multiply(const Truncated& a, const Truncated& b) {
  Truncated c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// 1 + w h, or its inverse sum (-w h)^k
Truncated linear_factor(int w, std::size_t len, bool inverse) {
  Truncated t(len, 0);
  if (!inverse) {
    t[0] = 1;
    if (len > 1) t[1] = w;
    return t;
  }
  Rational p = 1;
  for (std::size_t k = 0; k < len; ++k, p *= -w) t[k] = p;
  return t;
}

Truncated tangent_class(const series::HilbertData& h) {
  Truncated c = linear_factor(0, 4, false);
  for (int w : h.weights) c = multiply(c, linear_factor(w, 4, false));
  for (int d : h.degrees) c = multiply(c, linear_factor(d, 4, true));
  return c;
}

Rational normalization(const series::HilbertData& h) {
  Integer num = 1, den = 1;
  for (int d : h.degrees) num *= d;
  for (int w : h.weights) den *= w;
  return Rational(num, den);
}

Integer integral(const Rational& q, const char* what) {
  if (denominator(q) != 1)
    throw DomainError(std::string(what) + " is not an integer: " + q.str());
  return numerator(q);
}

void require_threefold(const series::HilbertData& h) {
  h.validate();
  if (h.dimension() != 3)
    throw std::invalid_argument("complete intersection has dimension " +
                                std::to_string(h.dimension()) + ", expected 3");
}

}  // namespace

Integer ci_threefold_euler(const series::HilbertData& h) {
  require_threefold(h);
  return integral(tangent_class(h)[3] * normalization(h), "Euler number");
}

Integer ci_euler_weighted(const series::HilbertData& h) {
  require_threefold(h);
  const int sw = std::accumulate(h.weights.begin(), h.weights.end(), 0);
  const int sd = std::accumulate(h.degrees.begin(), h.degrees.end(), 0);
  if (sw != sd)
    throw std::invalid_argument("not Calabi-Yau: degree sum " + std::to_string(sd) +
                                " differs from weight sum " + std::to_string(sw));
  return ci_threefold_euler(h);
}

Integer ci_c2_dot_h(const series::HilbertData& h) {
  require_threefold(h);
  return integral(tangent_class(h)[2] * normalization(h), "c2.H");
}

// ---------------------------------------------------------------------------

AmbientChernData::AmbientChernData(int dimension, std::map<Key, Integer> numbers)
    : dimension_(dimension), numbers_(std::move(numbers)) {
  if (dimension_ < 1) throw std::invalid_argument("ambient dimension must be positive");
  for (const auto& [key, value] : numbers_) {
    if (key.size() != static_cast<std::size_t>(dimension_) + 1)
      throw std::invalid_argument("Chern number key has wrong length");
    int wd = key.back();
    for (int i = 0; i < dimension_; ++i) wd += (i + 1) * key[i];
    if (wd != dimension_) throw std::invalid_argument("Chern number key has wrong degree");
  }
  Key top(static_cast<std::size_t>(dimension_) + 1, 0);
  top.back() = dimension_;
  auto it = numbers_.find(top);
  if (it == numbers_.end() || it->second <= 0)
    throw std::invalid_argument("ambient data needs a positive H^dim");
}

const Integer& AmbientChernData::at(const Key& key) const {
  auto it = numbers_.find(key);
  if (it == numbers_.end()) {
    std::string k;
    for (int e : key) k += (k.empty() ? "" : " ") + std::to_string(e);
    throw MissingChernNumber("missing Chern number [" + k + "]", key);
  }
  return it->second;
}

namespace {

// c_1..c_dim weigh 1..dim, H weighs 1.
Ring class_ring(int dim) {
  std::vector<int> w;
  for (int i = 1; i <= dim; ++i) w.push_back(i);
  w.push_back(1);
  return Ring(Domain::rationals(), WeightedGrading(std::move(w)));
}

}  // namespace

AmbientChernData AmbientChernData::projective_space(int n) {
  if (n < 1) throw std::invalid_argument("projective space dimension must be positive");
  std::vector<Integer> binom(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) binom[i] = binom[i - 1] * (n + 2 - i) / i;
  std::map<Key, Integer> numbers;
  for (const Monomial& m : algebra::monomials_of_degree(class_ring(n), n)) {
    Integer v = 1;
    for (int i = 0; i < n; ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e) v *= binom[i + 1];
    numbers.emplace(Key(m.exponents().begin(), m.exponents().end()), v);
  }
  return AmbientChernData(n, std::move(numbers));
}

AmbientChernData AmbientChernData::grassmannian_g25() { return parse(data::kG25Chern); }

AmbientChernData AmbientChernData::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int dim = -1;
  std::map<Key, Integer> numbers;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t here = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "dimension") {
      if (!(ls >> dim) || dim < 1) throw ParseError("bad dimension line", here);
      continue;
    }
    if (dim < 1) throw ParseError("Chern data must start with a dimension line", here);
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key : value'", here);
    std::istringstream ks(line.substr(0, colon));
    Key key;
    int e;
    while (ks >> e) key.push_back(e);
    if (!ks.eof() || key.size() != static_cast<std::size_t>(dim) + 1)
      throw ParseError("key must have " + std::to_string(dim + 1) + " exponents", here);
    std::istringstream vs(line.substr(colon + 1));
    std::string value;
    if (!(vs >> value)) throw ParseError("missing value", here + colon);
    try {
      numbers[key] = Integer(value);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + value + "'", here + colon);
    }
  }
  if (dim < 1) throw ParseError("missing dimension line", 0);
  return AmbientChernData(dim, std::move(numbers));
}

std::string AmbientChernData::to_string() const {
  std::string out = "dimension " + std::to_string(dimension_) + "\n";
  for (const auto& [key, value] : numbers_) {
    for (int e : key) out += std::to_string(e) + " ";
    out += ": " + value.str() + "\n";
  }
  return out;
}

Integer ci_euler_ambient(const AmbientChernData& a, const std::vector<int>& degrees) {
  const int n = a.dimension();
  if (n - static_cast<int>(degrees.size()) != 3)
    throw std::invalid_argument("ambient dimension minus number of degrees must be 3");
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("degrees must be positive");

  const Ring ring = class_ring(n);
  const auto H = MultiPoly::variable(ring, static_cast<std::size_t>(n));
  auto truncate = [&](const MultiPoly& f) {
    MultiPoly g(ring);
    for (const auto& [m, c] : f.terms())
      if (ring.grading().degree(m) <= 3) g.add_term(m, c);
    return g;
  };

  MultiPoly total = MultiPoly::constant(ring, 1);
  for (int i = 0; i < n && i < 3; ++i) total += MultiPoly::variable(ring, static_cast<std::size_t>(i));
  for (int d : degrees) {
    MultiPoly inv = MultiPoly::constant(ring, 1);
    MultiPoly power = MultiPoly::constant(ring, 1);
    for (int k = 1; k <= 3; ++k) {
      power = power * H.scaled(Coefficient(Rational(-d)));
      inv += power;
    }
    total = truncate(total * inv);
  }

  Rational scale = 1;
  for (int d : degrees) scale *= d;
  Rational chi = 0;
  for (const auto& [m, c] : total.terms()) {
    if (ring.grading().degree(m) != 3) continue;
    AmbientChernData::Key key(m.exponents().begin(), m.exponents().end());
    key.back() += static_cast<int>(degrees.size());
    chi += c.rational() * Rational(a.at(key));
  }
  return integral(chi * scale, "Euler number");
}

// ---------------------------------------------------------------------------

Integer surface_euler_fano(const FanoModel& f, int m) {
  if (m < 1) throw std::invalid_argument("surface_euler_fano: m must be >= 1");
  const Integer M = m;
  return M * f.Hc2 + M * M * (M - f.index) * f.H3;
}

Integer curve_euler_ci_fano(const FanoModel& f, int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("curve_euler_ci_fano: a, b must be >= 1");
  return -Integer(a + b - f.index) * a * b * f.H3;
}

Integer delpezzo_euler(int r) {
  if (r < 1 || r > 9) throw std::invalid_argument("del Pezzo degree must lie in 1..9");
  return 12 - r;
}

}  // namespace cyc::chern
