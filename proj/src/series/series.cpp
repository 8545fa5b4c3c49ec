#include "cyc/series/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cyc::series {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) coefficients_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::one_minus_power(int a) {
  if (a < 1) throw std::invalid_argument("denominator exponents must be positive");
  std::vector<Integer> c(static_cast<std::size_t>(a) + 1, 0);
  c[0] = 1;
  c[static_cast<std::size_t>(a)] = -1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Integer IntPolynomial::operator[](std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : Integer(0);
}

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer v = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) v = v * t + *it;
  return v;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
      c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i) s += ' ';
    s += coefficients_[i].str();
  }
  return s;
}

RationalSeries::RationalSeries(IntPolynomial numerator, std::vector<int> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  for (int a : denominator_)
    if (a < 1) throw std::invalid_argument("denominator exponents must be positive");
  std::sort(denominator_.begin(), denominator_.end());
}

IntPolynomial RationalSeries::expanded_denominator() const {
  IntPolynomial d{1};
  for (int a : denominator_) d = d * IntPolynomial::one_minus_power(a);
  return d;
}

void HilbertData::validate() const {
  if (weights.empty()) throw std::invalid_argument("HilbertData needs at least one weight");
  for (int w : weights)
    if (w < 1) throw std::invalid_argument("weights must be positive");
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("degrees must be positive");
}

RationalSeries ci_hilbert_series(const HilbertData& h) {
  h.validate();
  IntPolynomial num{1};
  for (int d : h.degrees) num = num * IntPolynomial::one_minus_power(d);
  return RationalSeries(num, h.weights);
}

std::vector<Integer> series_coefficients(const RationalSeries& s, int N) {
  if (N < 0) throw std::invalid_argument("series_coefficients: N must be >= 0");
  const auto n = static_cast<std::size_t>(N);
  std::vector<Integer> c(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) c[i] = s.numerator()[i];
  // multiply by 1/(1 - t^a) = running sums with stride a
  for (int a : s.denominator())
    for (std::size_t i = static_cast<std::size_t>(a); i <= n; ++i) c[i] += c[i - a];
  return c;
}

bool series_equal(const RationalSeries& a, const RationalSeries& b) {
  return a.numerator() * b.expanded_denominator() == b.numerator() * a.expanded_denominator();
}

IntPolynomial numerator_over_standard(const RationalSeries& s, int k) {
  if (k < 0) throw std::invalid_argument("numerator_over_standard: k must be >= 0");
  IntPolynomial p = s.numerator();
  for (int i = 0; i < k; ++i) p = p * IntPolynomial::one_minus_power(1);
  const IntPolynomial d = s.expanded_denominator();  // constant term 1

  std::vector<Integer> q;
  if (p.degree() >= d.degree()) {
    q.assign(static_cast<std::size_t>(p.degree() - d.degree()) + 1, 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      Integer v = p[i];
      for (std::size_t j = 1; j <= i && j < d.coefficients().size(); ++j) v -= d[j] * q[i - j];
      q[i] = v;
    }
  }
  IntPolynomial quotient(std::move(q));
  IntPolynomial remainder = p - quotient * d;
  if (!remainder.is_zero()) {
    long first = 0;
    while (remainder[static_cast<std::size_t>(first)] == 0) ++first;
    throw NotPolynomial("series times (1-t)^" + std::to_string(k) +
                            " is not a polynomial: remainder starts in degree " +
                            std::to_string(first),
                        first);
  }
  return quotient;
}

Integer image_degree(const RationalSeries& s, int dim) {
  return numerator_over_standard(s, dim + 1).evaluate(1);
}

Integer embedding_dimension(const RationalSeries& s) { return series_coefficients(s, 1)[1] - 1; }

RationalSeries veronese(const RationalSeries& s, int k) {
  if (k < 1) throw std::invalid_argument("veronese: k must be >= 1");
  IntPolynomial num = s.numerator();
  for (int a : s.denominator()) {
    // (1 - t^{ka}) / (1 - t^a) = 1 + t^a + ... + t^{a(k-1)}
    std::vector<Integer> factor(static_cast<std::size_t>(a) * (k - 1) + 1, 0);
    for (int j = 0; j < k; ++j) factor[static_cast<std::size_t>(a) * j] = 1;
    num = num * IntPolynomial(std::move(factor));
  }
  std::vector<Integer> picked;
  for (std::size_t i = 0; i < num.coefficients().size(); i += static_cast<std::size_t>(k))
    picked.push_back(num.coefficients()[i]);
  return RationalSeries(IntPolynomial(std::move(picked)), s.denominator());
}

Integer riemann_roch_fano(int r, long n) {
  if (r < 1 || r > 5) throw std::invalid_argument("riemann_roch_fano: r must lie in 1..5");
  const Integer N = n;
  const Integer cubic = Integer(r) * N * (N + 1) * (N + 2);
  if (cubic % 6 != 0) throw std::logic_error("riemann_roch_fano: non-integral value");
  return cubic / 6 + N + 1;
}

Integer section_dims_construction1(int r, long n) {
  if (r < 1 || r > 5) throw std::invalid_argument("section_dims_construction1: r must lie in 1..5");
  if (n < 0) throw std::invalid_argument("section_dims_construction1: n must be >= 0");
  if (n == 0) return 1;
  const Integer N = n;
  const Integer twice = Integer(r) * N * N * N + Integer(r) * N;
  if (twice % 2 != 0) throw std::logic_error("section_dims_construction1: non-integral value");
  return twice / 2 + 3 * N;
}

RationalSeries cy3_series(const Integer& l3, const Integer& c2l) {
  constexpr int kTerms = 9;
  std::vector<Integer> h(kTerms, 0);
  h[0] = 1;
  for (int n = 1; n < kTerms; ++n) {
    const Rational v = Rational(l3 * n * n * n, 6) + Rational(c2l * n, 12);
    if (denominator(v) != 1) throw DomainError("non-integral h^0 in degree " + std::to_string(n));
    h[static_cast<std::size_t>(n)] = numerator(v);
  }
  // (1-t)^4 * sum h_n t^n has degree 4 since h is cubic for n >= 1
  IntPolynomial num = IntPolynomial(h);
  for (int i = 0; i < 4; ++i) num = num * IntPolynomial::one_minus_power(1);
  std::vector<Integer> c(num.coefficients().begin(),
                         num.coefficients().begin() + std::min<std::size_t>(5, num.coefficients().size()));
  return RationalSeries(IntPolynomial(std::move(c)), {1, 1, 1, 1});
}

Integer defect(const Integer& ideal_dim_d, const Integer& ambient_dim_d, const Integer& mu) {
  const Integer delta = ideal_dim_d - ambient_dim_d + mu;
  if (delta < 0)
    throw std::invalid_argument("negative defect " + delta.str() + ": inconsistent inputs");
  return delta;
}

Integer defect_quintic(const Integer& node_ideal_hf5, const Integer& mu) {
  constexpr int kQuinticsOnP4 = 126;
  if (node_ideal_hf5 < 0 || node_ideal_hf5 > kQuinticsOnP4)
    throw std::invalid_argument("defect_quintic: HF(5) must lie in 0..126");
  return defect(kQuinticsOnP4 - node_ideal_hf5, kQuinticsOnP4, mu);
}

std::string to_string(const RationalSeries& s) {
  std::string out = s.numerator().to_string() + " ||";
  for (std::size_t i = 0; i < s.denominator().size(); ++i)
    out += (i ? "," : " ") + std::to_string(s.denominator()[i]);
  return out;
}

RationalSeries parse_series(std::string_view text) {
  const auto bar = text.find("||");
  if (bar == std::string_view::npos) throw ParseError("series: missing '||'", 0);
  std::vector<Integer> num;
  {
    std::istringstream in{std::string(text.substr(0, bar))};
    std::string tok;
    while (in >> tok) {
      try {
        num.emplace_back(tok);
      } catch (const std::exception&) {
        throw ParseError("series: bad numerator coefficient '" + tok + "'", 0);
      }
    }
  }
  std::vector<int> den;
  std::string rest(text.substr(bar + 2));
  std::replace(rest.begin(), rest.end(), ',', ' ');
  std::istringstream in(rest);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int a = 0;
    try {
      a = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || a < 1)
      throw ParseError("series: bad denominator exponent '" + tok + "'", bar + 2);
    den.push_back(a);
  }
  return RationalSeries(IntPolynomial(std::move(num)), std::move(den));
}

namespace {

nlohmann::json integer_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return n.convert_to<std::int64_t>();
  return n.str();
}

}  // namespace

nlohmann::json to_json(const RationalSeries& s, int N) {
  nlohmann::json num = nlohmann::json::array();
  for (const auto& c : s.numerator().coefficients()) num.push_back(integer_json(c));
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : series_coefficients(s, N)) coeffs.push_back(integer_json(c));
  return {{"numerator", num}, {"denominator", s.denominator()}, {"coefficients", coeffs}};
}

}  // namespace cyc::series
