#include "cyc/groebner/groebner.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cyc/error.hpp"

namespace cyc::groebner {

using algebra::Coefficient;

// ---------------------------------------------------------------------------
// Monomial orders on the public Monomial type.

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation)
    : kind_(kind), permutation_(std::move(permutation)) {
  std::vector<std::size_t> sorted = permutation_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw std::invalid_argument("monomial order needs a permutation of 0..n-1");
}

namespace {
std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}
}  // namespace

MonomialOrder MonomialOrder::grevlex(std::size_t n) { return {OrderKind::grevlex, identity(n)}; }
MonomialOrder MonomialOrder::grlex(std::size_t n) { return {OrderKind::grlex, identity(n)}; }
MonomialOrder MonomialOrder::lex(std::size_t n) { return {OrderKind::lex, identity(n)}; }

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = permutation_.size();
  if (kind_ != OrderKind::lex)
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (kind_ == OrderKind::grevlex) {
    for (std::size_t k = n; k-- > 0;) {
      const auto v = permutation_[k];
      if (a[v] != b[v]) return b[v] <=> a[v];
    }
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      const auto v = permutation_[k];
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Internal representation: exponents stored in order position, so the
// comparison never looks at the permutation.

namespace detail {

struct Exp {
  std::array<std::uint16_t, kMaxVariables> e{};
  std::uint32_t deg = 0;
};

struct Term {
  Exp m;
  std::uint32_t c;
};

using Poly = std::vector<Term>;

struct Basis {
  Ring ring;
  MonomialOrder order;
  std::uint32_t p;
  std::vector<Poly> polys;
  std::vector<MultiPoly> gens;
};

}  // namespace detail

namespace {

using detail::Exp;
using detail::Poly;
using detail::Term;

bool same(const Exp& a, const Exp& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a.e[i] != b.e[i]) return false;
  return true;
}

bool divides(const Exp& a, const Exp& b, std::size_t n) {
  if (a.deg > b.deg) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Exp mul(const Exp& a, const Exp& b, std::size_t n) {
  Exp r;
  for (std::size_t i = 0; i < n; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  r.deg = a.deg + b.deg;
  return r;
}

Exp quot(const Exp& a, const Exp& b, std::size_t n) {
  Exp r;
  for (std::size_t i = 0; i < n; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

Exp lcm_exp(const Exp& a, const Exp& b, std::size_t n) {
  Exp r;
  for (std::size_t i = 0; i < n; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

bool coprime(const Exp& a, const Exp& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

std::uint32_t sev(const Exp& a, std::size_t n) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (a.e[i]) s |= 1u << i;
  return s;
}

class Engine {
 public:
  Engine(std::size_t n, std::uint32_t p, OrderKind kind, std::uint64_t budget)
      : n_(n), p_(p), kind_(kind), budget_(budget) {}

  std::size_t n() const { return n_; }
  std::uint32_t p() const { return p_; }

  // 1, -1 or 0
  int cmp(const Exp& a, const Exp& b) const {
    if (kind_ != OrderKind::lex && a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    if (kind_ == OrderKind::grevlex) {
      for (std::size_t k = n_; k-- > 0;)
        if (a.e[k] != b.e[k]) return a.e[k] < b.e[k] ? 1 : -1;
    } else {
      for (std::size_t k = 0; k < n_; ++k)
        if (a.e[k] != b.e[k]) return a.e[k] > b.e[k] ? 1 : -1;
    }
    return 0;
  }

  std::uint32_t mulmod(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }

  void sort(Poly& f) const {
    std::sort(f.begin(), f.end(), [&](const Term& a, const Term& b) { return cmp(a.m, b.m) > 0; });
  }

  // f[fi..] + c * q * g[gj..]
  Poly combine(const Poly& f, std::size_t fi, const Poly& g, std::size_t gj, const Exp& q,
               std::uint32_t c) const {
    Poly out;
    out.reserve(f.size() - std::min(fi, f.size()) + g.size() - std::min(gj, g.size()));
    while (fi < f.size() && gj < g.size()) {
      const Exp gm = mul(g[gj].m, q, n_);
      const int s = cmp(f[fi].m, gm);
      if (s > 0) {
        out.push_back(f[fi++]);
      } else if (s < 0) {
        out.push_back({gm, mulmod(c, g[gj++].c)});
      } else {
        const std::uint32_t v = (f[fi].c + mulmod(c, g[gj].c)) % p_;
        if (v) out.push_back({gm, v});
        ++fi;
        ++gj;
      }
    }
    for (; fi < f.size(); ++fi) out.push_back(f[fi]);
    for (; gj < g.size(); ++gj) out.push_back({mul(g[gj].m, q, n_), mulmod(c, g[gj].c)});
    return out;
  }

  void make_monic(Poly& f) const {
    if (f.empty() || f[0].c == 1) return;
    const std::uint32_t inv = algebra::mod_inverse(f[0].c, p_);
    for (auto& t : f) t.c = mulmod(t.c, inv);
  }

  int find_divisor(const Exp& m) const {
    const std::uint32_t s = sev(m, n_);
    for (std::size_t k = 0; k < active_.size(); ++k) {
      const std::size_t i = active_[k];
      if ((sevs_[i] & ~s) == 0 && divides(polys_[i][0].m, m, n_)) return static_cast<int>(i);
    }
    return -1;
  }

  // Full reduction by the active polynomials, which are monic.
  Poly reduce(Poly f) {
    Poly res;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const int d = find_divisor(f[pos].m);
      if (d < 0) {
        res.push_back(f[pos++]);
        continue;
      }
      if (++steps_ > budget_)
        throw BudgetExceeded("Groebner reduction budget of " + std::to_string(budget_) +
                             " steps exceeded");
      const Poly& g = polys_[static_cast<std::size_t>(d)];
      const Exp q = quot(f[pos].m, g[0].m, n_);
      f = combine(f, pos + 1, g, 1, q, p_ - f[pos].c);
      pos = 0;
    }
    return res;
  }

  std::size_t add(Poly f) {
    sevs_.push_back(sev(f[0].m, n_));
    polys_.push_back(std::move(f));
    return polys_.size() - 1;
  }

  void activate_all() {
    active_.resize(polys_.size());
    std::iota(active_.begin(), active_.end(), 0);
  }

  const std::vector<Poly>& polys() const { return polys_; }
  const std::vector<std::size_t>& active() const { return active_; }

  // Buchberger with the normal selection strategy and the Gebauer-Moeller
  // criteria in the form of Becker-Weispfenning's UPDATE.
  std::vector<Poly> groebner(std::vector<Poly> inputs) {
    for (auto& f : inputs) {
      make_monic(f);
      Poly h = reduce(std::move(f));
      if (h.empty()) continue;
      make_monic(h);
      if (h[0].m.deg == 0) return {h};
      update(add(std::move(h)));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto& a = pairs_[k].lcm;
        const auto& b = pairs_[best].lcm;
        if (a.deg < b.deg || (a.deg == b.deg && cmp(a, b) < 0)) best = k;
      }
      const Pair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();

      const Poly& fi = polys_[pr.i];
      const Poly& fj = polys_[pr.j];
      const Exp qi = quot(pr.lcm, fi[0].m, n_);
      const Exp qj = quot(pr.lcm, fj[0].m, n_);
      Poly s = combine(Poly{}, 0, fi, 1, qi, 1);
      s = combine(s, 0, fj, 1, qj, p_ - 1);
      Poly h = reduce(std::move(s));
      if (h.empty()) continue;
      make_monic(h);
      if (h[0].m.deg == 0) return {h};
      update(add(std::move(h)));
    }

    // active_ is a minimal basis; reduce the tails
    std::vector<Poly> out;
    for (std::size_t i : active_) {
      const Poly& g = polys_[i];
      Poly tail(g.begin() + 1, g.end());
      Poly red = reduce(std::move(tail));
      Poly full{g[0]};
      full.insert(full.end(), red.begin(), red.end());
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) { return cmp(a[0].m, b[0].m) > 0; });
    return out;
  }

  std::uint64_t steps() const { return steps_; }

 private:
  struct Pair {
    std::size_t i, j;
    Exp lcm;
  };

  void update(std::size_t h) {
    const Exp lh = polys_[h][0].m;
    std::vector<Pair> c;
    for (std::size_t g : active_) c.push_back({g, h, lcm_exp(polys_[g][0].m, lh, n_)});

    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = coprime(polys_[c[k].i][0].m, lh, n_);
      if (!keep) {
        keep = true;
        for (std::size_t o = k + 1; o < c.size() && keep; ++o)
          if (divides(c[o].lcm, c[k].lcm, n_)) keep = false;
        for (std::size_t o = 0; o < d.size() && keep; ++o)
          if (divides(d[o].lcm, c[k].lcm, n_)) keep = false;
      }
      if (keep) d.push_back(c[k]);
    }

    std::vector<Pair> next;
    for (const Pair& pr : pairs_) {
      const bool drop = divides(lh, pr.lcm, n_) &&
                        !same(lcm_exp(polys_[pr.i][0].m, lh, n_), pr.lcm, n_) &&
                        !same(lcm_exp(lh, polys_[pr.j][0].m, n_), pr.lcm, n_);
      if (!drop) next.push_back(pr);
    }
    for (const Pair& pr : d)
      if (!coprime(polys_[pr.i][0].m, lh, n_)) next.push_back(pr);
    pairs_ = std::move(next);

    std::vector<std::size_t> g;
    for (std::size_t i : active_)
      if (!divides(lh, polys_[i][0].m, n_)) g.push_back(i);
    g.push_back(h);
    active_ = std::move(g);
  }

  std::size_t n_;
  std::uint32_t p_;
  OrderKind kind_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::vector<Poly> polys_;
  std::vector<std::uint32_t> sevs_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

Poly to_internal(const MultiPoly& f, const MonomialOrder& order, const Engine& eng) {
  const auto& perm = order.permutation();
  Poly out;
  for (const auto& [m, c] : f.terms()) {
    Term t;
    for (std::size_t k = 0; k < perm.size(); ++k) {
      const auto e = m[perm[k]];
      if (e > 0xFFFFu) throw std::invalid_argument("exponent too large for the Groebner engine");
      t.m.e[k] = static_cast<std::uint16_t>(e);
      t.m.deg += e;
    }
    t.c = c.residue_value();
    out.push_back(t);
  }
  eng.sort(out);
  return out;
}

MultiPoly from_internal(const Poly& f, const MonomialOrder& order, const Ring& ring) {
  const auto& perm = order.permutation();
  MultiPoly out(ring);
  for (const Term& t : f) {
    Monomial m(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) m[perm[k]] = t.m.e[k];
    out.add_term(m, Coefficient::residue(t.c, ring.domain().prime()));
  }
  return out;
}

Engine engine_for(const detail::Basis& b, std::uint64_t budget = kDefaultBudget) {
  Engine eng(b.ring.variables(), b.p, b.order.kind(), budget);
  for (const auto& g : b.polys) eng.add(g);
  eng.activate_all();
  return eng;
}

}  // namespace

// ---------------------------------------------------------------------------

const Ring& GroebnerBasis::ring() const { return impl_->ring; }
const MonomialOrder& GroebnerBasis::order() const { return impl_->order; }
const std::vector<MultiPoly>& GroebnerBasis::generators() const { return impl_->gens; }

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : impl_->polys) out.push_back(from_internal({g[0]}, impl_->order, impl_->ring).terms().begin()->first);
  return out;
}

bool GroebnerBasis::is_unit() const {
  return impl_->polys.size() == 1 && impl_->polys[0][0].m.deg == 0;
}

GroebnerBasis buchberger(std::span<const MultiPoly> gens, const MonomialOrder& order,
                         std::uint64_t budget) {
  if (gens.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  const Ring& ring = gens[0].ring();
  for (const auto& g : gens)
    if (!(g.ring() == ring)) throw RingMismatch("generators live in different rings");
  if (!ring.domain().is_prime_field())
    throw DomainError("Groebner bases are only supported over prime fields");
  if (ring.variables() > kMaxVariables || ring.variables() == 0)
    throw std::invalid_argument("Groebner engine supports 1.." + std::to_string(kMaxVariables) +
                                " variables");
  if (order.variables() != ring.variables())
    throw std::invalid_argument("monomial order has the wrong number of variables");

  Engine eng(ring.variables(), ring.domain().prime(), order.kind(), budget);
  std::vector<Poly> inputs;
  for (const auto& g : gens)
    if (!g.is_zero()) inputs.push_back(to_internal(g, order, eng));

  auto impl = std::make_shared<detail::Basis>(detail::Basis{ring, order, ring.domain().prime(), {}, {}});
  if (!inputs.empty()) impl->polys = eng.groebner(std::move(inputs));
  for (const auto& g : impl->polys) impl->gens.push_back(from_internal(g, order, ring));
  return GroebnerBasis(std::move(impl));
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& g) {
  const auto& b = g.internal();
  if (!(f.ring() == b.ring)) throw RingMismatch("normal_form: polynomial from another ring");
  Engine eng = engine_for(b, ~std::uint64_t{0});
  return from_internal(eng.reduce(to_internal(f, b.order, eng)), b.order, b.ring);
}

bool is_zero_dimensional(const GroebnerBasis& g) {
  const auto& b = g.internal();
  const std::size_t n = b.ring.variables();
  if (g.is_unit()) return true;
  std::vector<bool> seen(n, false);
  for (const auto& p : b.polys) {
    const Exp& m = p[0].m;
    std::size_t nz = 0, var = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (m.e[k]) ++nz, var = k;
    if (nz == 1) seen[var] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

namespace {

// Standard monomials as internal exponents, by depth-first search with pruning.
std::vector<Exp> standard_exps(const detail::Basis& b) {
  const std::size_t n = b.ring.variables();
  std::vector<Exp> lms;
  for (const auto& p : b.polys) lms.push_back(p[0].m);
  std::vector<Exp> out;
  if (lms.size() == 1 && lms[0].deg == 0) return out;
  Exp cur;
  auto reducible = [&](const Exp& m) {
    return std::any_of(lms.begin(), lms.end(), [&](const Exp& l) { return divides(l, m, n); });
  };
  // extend variable k upward until divisible; earlier variables fixed
  auto dfs = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    while (!reducible(cur)) {
      self(self, k + 1);
      ++cur.e[k];
      ++cur.deg;
    }
    cur.deg -= cur.e[k];
    cur.e[k] = 0;
  };
  dfs(dfs, 0);
  return out;
}

void require_zero_dimensional(const GroebnerBasis& g) {
  if (!is_zero_dimensional(g)) throw std::invalid_argument("ideal is not zero-dimensional");
}

}  // namespace

std::vector<Monomial> standard_monomials(const GroebnerBasis& g) {
  require_zero_dimensional(g);
  const auto& b = g.internal();
  std::vector<Monomial> out;
  for (const Exp& e : standard_exps(b))
    out.push_back(from_internal({Term{e, 1}}, b.order, b.ring).terms().begin()->first);
  return out;
}

std::uint64_t quotient_degree(const GroebnerBasis& g) {
  require_zero_dimensional(g);
  return standard_exps(g.internal()).size();
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const std::uint64_t inv = algebra::mod_inverse(rows[rank][c], p);
    for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(v * inv % p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::uint64_t f = rows[r][c];
      if (!f) continue;
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + (p - f) * rows[rank][k]) % p);
    }
    ++rank;
  }
  return rank;
}

std::uint64_t graded_piece_dim(std::span<const MultiPoly> gens, std::int64_t d) {
  if (d < 0) throw std::invalid_argument("graded_piece_dim: d must be >= 0");
  if (gens.empty()) return 0;
  const Ring& ring = gens[0].ring();
  if (!ring.domain().is_prime_field())
    throw DomainError("graded_piece_dim is only supported over prime fields");
  const auto basis = algebra::monomials_of_degree(ring, d);
  std::map<Monomial, std::size_t, algebra::GrevlexDescending> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);

  const std::uint32_t p = ring.domain().prime();
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& g : gens) {
    if (!(g.ring() == ring)) throw RingMismatch("generators live in different rings");
    if (g.is_zero()) continue;
    const auto dg = algebra::weighted_degree(g, ring.grading());
    if (dg > d) continue;
    for (const auto& m : algebra::monomials_of_degree(ring, d - dg)) {
      std::vector<std::uint32_t> row(basis.size(), 0);
      for (const auto& [gm, c] : g.terms()) row[column.at(gm * m)] = c.residue_value();
      rows.push_back(std::move(row));
    }
  }
  return rank_mod_p(rows, p);
}

namespace {

using UPoly = std::vector<std::uint32_t>;  // low degree first

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly upoly_mod(UPoly a, const UPoly& b, std::uint32_t p) {
  const std::uint64_t inv = algebra::mod_inverse(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t f = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + (p - f) * b[i]) % p);
    trim(a);
  }
  return a;
}

bool squarefree(const UPoly& m, std::uint32_t p) {
  UPoly dm;
  for (std::size_t i = 1; i < m.size(); ++i)
    dm.push_back(static_cast<std::uint32_t>(i % p * m[i] % p));
  trim(dm);
  if (dm.empty()) return m.size() <= 1;
  UPoly a = m, b = dm;
  while (!b.empty()) {
    UPoly r = upoly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;  // gcd is a nonzero constant
}

}  // namespace

bool separability_check(const GroebnerBasis& g, std::uint64_t seed) {
  require_zero_dimensional(g);
  const auto& b = g.internal();
  const std::size_t n = b.ring.variables();
  const auto std_exps = standard_exps(b);
  const std::size_t D = std_exps.size();
  if (D == 0) return false;

  auto key = [n](const Exp& e) { return std::vector<std::uint16_t>(e.e.begin(), e.e.begin() + n); };
  std::map<std::vector<std::uint16_t>, std::size_t> index;
  for (std::size_t i = 0; i < D; ++i) index.emplace(key(std_exps[i]), i);

  Engine eng = engine_for(b);
  const std::uint32_t p = b.p;
  algebra::FieldSampler sampler(p, seed);
  Poly ell;
  for (std::size_t k = 0; k < n; ++k) {
    Term t{Exp{}, sampler.next_nonzero()};
    t.m.e[k] = 1;
    t.m.deg = 1;
    ell.push_back(t);
  }
  eng.sort(ell);

  struct Row {
    std::size_t pivot;
    std::vector<std::uint32_t> vals;
    std::vector<std::uint32_t> combo;
  };
  std::vector<Row> rows;
  Poly v = eng.reduce(Poly{Term{Exp{}, 1}});
  for (std::size_t k = 0; k <= D; ++k) {
    std::vector<std::uint32_t> vals(D, 0), combo(D + 1, 0);
    for (const Term& t : v) vals[index.at(key(t.m))] = t.c;
    combo[k] = 1;
    for (const Row& r : rows) {
      const std::uint64_t f = vals[r.pivot];
      if (!f) continue;
      for (std::size_t i = 0; i < D; ++i)
        vals[i] = static_cast<std::uint32_t>((vals[i] + (p - f) * r.vals[i]) % p);
      for (std::size_t i = 0; i <= D; ++i)
        combo[i] = static_cast<std::uint32_t>((combo[i] + (p - f) * r.combo[i]) % p);
    }
    const auto nz = std::find_if(vals.begin(), vals.end(), [](std::uint32_t x) { return x != 0; });
    if (nz == vals.end()) {
      // sum combo_i * ell^i == 0: the minimal polynomial has degree k
      UPoly m(combo.begin(), combo.begin() + static_cast<std::ptrdiff_t>(k) + 1);
      return k == D && squarefree(m, p);
    }
    const std::size_t piv = static_cast<std::size_t>(nz - vals.begin());
    const std::uint64_t inv = algebra::mod_inverse(vals[piv], p);
    for (auto& x : vals) x = static_cast<std::uint32_t>(x * inv % p);
    for (auto& x : combo) x = static_cast<std::uint32_t>(x * inv % p);
    rows.push_back({piv, std::move(vals), std::move(combo)});

    // v <- NF(ell * v)
    Poly next;
    for (const Term& t : ell) next = eng.combine(next, 0, v, 0, t.m, t.c);
    v = eng.reduce(std::move(next));
  }
  return false;  // unreachable: D+1 vectors in a D-dimensional space
}

}  // namespace cyc::groebner
