#include "cyc/groebner/nodes.hpp"

#include <chrono>
#include <stdexcept>

#include "cyc/pfaffian/pfaffian.hpp"
#include "cyc/series/series.hpp"

namespace cyc::groebner {

using algebra::Coefficient;
using algebra::derive_seed;
using algebra::Domain;
using algebra::random_homogeneous;

const std::vector<NodeConstruction>& all_node_constructions() {
  static const std::vector<NodeConstruction> all = {
      NodeConstruction::c3_deg4, NodeConstruction::c3_deg3, NodeConstruction::c4_deg5,
      NodeConstruction::c4_deg3, NodeConstruction::c4_deg4};
  return all;
}

std::string to_string(NodeConstruction c) {
  switch (c) {
    case NodeConstruction::c3_deg4: return "c3-deg4";
    case NodeConstruction::c3_deg3: return "c3-deg3";
    case NodeConstruction::c4_deg5: return "c4-deg5";
    case NodeConstruction::c4_deg3: return "c4-deg3";
    case NodeConstruction::c4_deg4: return "c4-deg4";
  }
  return "?";
}

NodeConstruction parse_node_construction(std::string_view tag) {
  for (auto c : all_node_constructions())
    if (to_string(c) == tag) return c;
  throw std::invalid_argument("unknown construction '" + std::string(tag) +
                              "' (expected c3-deg4, c3-deg3, c4-deg5, c4-deg3 or c4-deg4)");
}

int expected_nodes(NodeConstruction c) {
  switch (c) {
    case NodeConstruction::c3_deg4: return 36;
    case NodeConstruction::c3_deg3: return 24;
    case NodeConstruction::c4_deg5: return 28;
    case NodeConstruction::c4_deg3: return 12;
    case NodeConstruction::c4_deg4: return 20;
  }
  return 0;
}

namespace {

std::vector<MultiPoly> jacobian_ideal(const std::vector<MultiPoly>& fs) {
  return algebra::jacobian_generators(fs);
}

struct QuinticParts {
  MultiPoly f1, f2, g1, g2;
};

QuinticParts quintic_parts(const Ring& r, std::uint64_t seed) {
  return {random_homogeneous(2, r, derive_seed(seed, 1)), random_homogeneous(2, r, derive_seed(seed, 2)),
          random_homogeneous(3, r, derive_seed(seed, 3)), random_homogeneous(3, r, derive_seed(seed, 4))};
}

struct PfaffianParts {
  pfaffian::BorderedPfaffian n;
  std::vector<MultiPoly> small;  // p_1..p_5
  std::vector<MultiPoly> big;    // P_1..P_7
};

PfaffianParts pfaffian_parts(const Ring& r, std::uint64_t seed) {
  PfaffianParts parts{pfaffian::random_bordered(r, derive_seed(seed, 1)), {}, {}};
  parts.small = pfaffian::maximal_sub_pfaffians(parts.n.block);
  parts.big = pfaffian::maximal_sub_pfaffians(parts.n.matrix);
  return parts;
}

std::vector<MultiPoly> pfaffian_point_ideal(const PfaffianParts& parts) {
  std::vector<MultiPoly> ideal = parts.small;
  for (std::size_t i = 2; i < 7; ++i) ideal.push_back(parts.big[i]);
  return ideal;
}

MultiPoly constant_in(const Ring& r, std::uint32_t value) {
  return MultiPoly::constant(r, Coefficient::residue(value, r.domain().prime()));
}

}  // namespace

NodeScheme node_scheme(NodeConstruction c, std::uint32_t prime, std::uint64_t seed,
                       std::uint64_t budget) {
  const Domain dom = Domain::prime_field(prime);
  switch (c) {
    case NodeConstruction::c3_deg4: {
      Ring r(5, dom);
      auto q = quintic_parts(r, seed);
      return {r, jacobian_ideal({q.f1 * q.g1 + q.f2 * q.g2}), std::nullopt};
    }
    case NodeConstruction::c3_deg3: {
      Ring r(5, dom);
      auto cubic = random_homogeneous(3, r, derive_seed(seed, 1));
      auto lin = random_homogeneous(1, r, derive_seed(seed, 2));
      auto g1 = random_homogeneous(2, r, derive_seed(seed, 3));
      auto g2 = random_homogeneous(4, r, derive_seed(seed, 4));
      return {r, jacobian_ideal({cubic * g1 + lin * g2}), std::nullopt};
    }
    case NodeConstruction::c4_deg5: {
      Ring r(6, dom);
      auto parts = pfaffian_parts(r, seed);
      auto j = jacobian_ideal({parts.big[0], parts.big[1]});
      auto ideal = pfaffian_point_ideal(parts);
      auto gb = buchberger(ideal, MonomialOrder::grevlex(6), budget);
      bool inside = true;
      for (const auto& g : j)
        if (!normal_form(g, gb).is_zero()) inside = false;
      return {r, std::move(ideal), inside};
    }
    case NodeConstruction::c4_deg3: {
      Ring r(6, dom);
      auto h1 = random_homogeneous(1, r, derive_seed(seed, 1));
      auto h2 = random_homogeneous(1, r, derive_seed(seed, 2));
      auto cubic = random_homogeneous(3, r, derive_seed(seed, 3));
      algebra::FieldSampler consts(prime, derive_seed(seed, 4));
      std::vector<MultiPoly> cs;
      for (std::uint64_t k = 0; k < 2; ++k) {
        auto a = random_homogeneous(2, r, derive_seed(seed, 10 + k));
        auto b = random_homogeneous(2, r, derive_seed(seed, 20 + k));
        cs.push_back(a * h1 + b * h2 + constant_in(r, consts.next_nonzero()) * cubic);
      }
      return {r, jacobian_ideal(cs), std::nullopt};
    }
    case NodeConstruction::c4_deg4: {
      Ring r(6, dom);
      auto h = random_homogeneous(1, r, derive_seed(seed, 1));
      auto q1 = random_homogeneous(2, r, derive_seed(seed, 2));
      auto q2 = random_homogeneous(2, r, derive_seed(seed, 3));
      std::vector<MultiPoly> cs;
      for (std::uint64_t k = 0; k < 2; ++k) {
        auto a = random_homogeneous(2, r, derive_seed(seed, 10 + k));
        auto b = random_homogeneous(1, r, derive_seed(seed, 20 + k));
        auto e = random_homogeneous(1, r, derive_seed(seed, 30 + k));
        cs.push_back(a * h + b * q1 + e * q2);
      }
      return {r, jacobian_ideal(cs), std::nullopt};
    }
  }
  throw std::invalid_argument("unknown construction");
}

// ---------------------------------------------------------------------------

Chart random_chart(const Ring& ambient, std::uint64_t seed) {
  const std::size_t n = ambient.variables();
  if (n < 2) throw std::invalid_argument("chart needs at least two variables");
  if (!ambient.domain().is_prime_field()) throw DomainError("charts are drawn over prime fields");
  algebra::FieldSampler s(ambient.domain().prime(), derive_seed(seed, 1000));
  Chart c{Ring(n - 1, ambient.domain()), {}};
  for (std::size_t i = 0; i + 1 < n; ++i) c.coefficients.push_back(s.next());
  return c;
}

namespace {

// -sum a_i x_i in the affine ring
MultiPoly minus_linear_part(const Chart& c) {
  MultiPoly s(c.affine);
  for (std::size_t i = 0; i < c.coefficients.size(); ++i)
    s -= constant_in(c.affine, c.coefficients[i]) * MultiPoly::variable(c.affine, i);
  return s;
}

std::vector<MultiPoly> substitute_last(std::span<const MultiPoly> gens, const Chart& c,
                                       const MultiPoly& last) {
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < c.affine.variables(); ++i) images.push_back(MultiPoly::variable(c.affine, i));
  images.push_back(last);
  std::vector<MultiPoly> out;
  for (const auto& g : gens) out.push_back(algebra::evaluate(g, images, c.affine));
  return out;
}

}  // namespace

std::vector<MultiPoly> Chart::restrict_affine(std::span<const MultiPoly> gens) const {
  return substitute_last(gens, *this, MultiPoly::constant(affine, 1) + minus_linear_part(*this));
}

std::vector<MultiPoly> Chart::restrict_infinity(std::span<const MultiPoly> gens) const {
  return substitute_last(gens, *this, minus_linear_part(*this));
}

std::vector<MultiPoly> Chart::homogenize_back(std::span<const MultiPoly> affine_polys,
                                              const Ring& ambient) const {
  const std::size_t n = ambient.variables();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i + 1 < n; ++i) images.push_back(MultiPoly::variable(ambient, i));
  MultiPoly h = MultiPoly::variable(ambient, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) h += constant_in(ambient, coefficients[i]) * MultiPoly::variable(ambient, i);
  images.push_back(h);
  std::vector<MultiPoly> out;
  for (const auto& f : affine_polys) out.push_back(algebra::evaluate(algebra::homogenize(f, ambient), images, ambient));
  return out;
}

std::vector<MultiPoly> saturate_at_chart(std::span<const MultiPoly> gens, const Chart& chart,
                                         const Ring& ambient, std::uint64_t budget) {
  const auto gb = buchberger(chart.restrict_affine(gens), MonomialOrder::grevlex(chart.affine.variables()), budget);
  return chart.homogenize_back(gb.generators(), ambient);
}

// ---------------------------------------------------------------------------

nlohmann::json NodeReport::to_json(bool with_timing) const {
  nlohmann::json j = {{"construction", to_string(construction)},
                      {"prime", prime},
                      {"seed", seed},
                      {"zero_dimensional", zero_dimensional},
                      {"degree", degree ? nlohmann::json(*degree) : nlohmann::json(nullptr)},
                      {"separable", separable},
                      {"points_at_infinity", !infinity_empty},
                      {"expected", expected},
                      {"match", match},
                      {"status", status}};
  if (j_subset_i) j["j_subset_i"] = *j_subset_i;
  if (!detail.empty()) j["detail"] = detail;
  if (with_timing) j["runtime_ms"] = runtime_ms;
  return j;
}

NodeReport verify_nodes(NodeConstruction c, std::uint32_t prime, std::uint64_t seed,
                        std::uint64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  NodeReport r;
  r.construction = c;
  r.prime = prime;
  r.seed = seed;
  r.expected = expected_nodes(c);
  auto finish = [&]() {
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  const NodeScheme scheme = node_scheme(c, prime, seed, budget);
  r.j_subset_i = scheme.j_subset_i;
  const Chart chart = random_chart(scheme.ring, seed);
  const std::size_t m = chart.affine.variables();

  const auto at_infinity = buchberger(chart.restrict_infinity(scheme.ideal), MonomialOrder::grevlex(m), budget);
  r.infinity_empty = is_zero_dimensional(at_infinity);

  const auto affine = buchberger(chart.restrict_affine(scheme.ideal), MonomialOrder::grevlex(m), budget);
  r.zero_dimensional = is_zero_dimensional(affine);
  if (!r.zero_dimensional || !r.infinity_empty) {
    r.status = "seed-failure";
    r.detail = !r.zero_dimensional ? "singular locus is not zero-dimensional on the chart"
                                   : "chart hyperplane meets the singular locus";
    return finish();
  }
  r.degree = quotient_degree(affine);
  r.separable = separability_check(affine, derive_seed(seed, 2000));
  r.match = *r.degree == static_cast<std::uint64_t>(r.expected) && r.separable &&
            scheme.j_subset_i.value_or(true);
  r.status = r.match ? "ok" : "mismatch";
  return finish();
}

// ---------------------------------------------------------------------------

nlohmann::json DefectReport::to_json() const {
  nlohmann::json j = {{"name", name},
                      {"degree", degree},
                      {"ambient_dim", ambient_dim.convert_to<long long>()},
                      {"ideal_dim", ideal_dim},
                      {"mu", mu},
                      {"delta", delta.convert_to<long long>()}};
  if (series_hf) j["series_hf"] = series_hf->convert_to<long long>();
  return j;
}

DefectReport quintic_defect(std::uint32_t prime, std::uint64_t seed) {
  Ring r(5, Domain::prime_field(prime));
  auto q = quintic_parts(r, seed);
  const std::vector<MultiPoly> ideal = {q.f1, q.f2, q.g1, q.g2};
  DefectReport d;
  d.name = "quintic";
  d.degree = 5;
  d.ambient_dim = algebra::monomials_of_degree(r, 5).size();
  d.ideal_dim = graded_piece_dim(ideal, 5);
  d.mu = expected_nodes(NodeConstruction::c3_deg4);
  const auto hs = series::ci_hilbert_series({{1, 1, 1, 1, 1}, {2, 2, 3, 3}});
  d.series_hf = series::series_coefficients(hs, 5)[5];
  d.delta = series::defect(d.ideal_dim, d.ambient_dim, d.mu);
  return d;
}

DefectReport pfaffian_cubic_defect(std::uint32_t prime, std::uint64_t seed, std::uint64_t budget) {
  Ring r(6, Domain::prime_field(prime));
  auto parts = pfaffian_parts(r, seed);
  const auto chart = random_chart(r, seed);
  const auto saturated = saturate_at_chart(pfaffian_point_ideal(parts), chart, r, budget);
  DefectReport d;
  d.name = "pfaffian-cubics";
  d.degree = 3;
  d.ambient_dim = algebra::monomials_of_degree(r, 3).size();
  d.ideal_dim = graded_piece_dim(saturated, 3);
  d.mu = expected_nodes(NodeConstruction::c4_deg5);
  d.delta = series::defect(d.ideal_dim, d.ambient_dim, d.mu);
  return d;
}

}  // namespace cyc::groebner
