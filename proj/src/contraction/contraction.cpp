#include "cyc/contraction/contraction.hpp"

#include <stdexcept>

namespace cyc::contraction {

using series::IntPolynomial;

void RankTwoPicardModel::validate() const {
  if (r < 1 || r > 9) throw std::invalid_argument("del Pezzo degree must lie in 1..9");
  if (lambda >= 0) throw std::invalid_argument("lambda must be negative");
}

Rational triple_product(const RankTwoPicardModel& m, const Rational& a, const Rational& b) {
  // L^2.D = lambda^2 K_D^2, L.D^2 = lambda K_D^2, D^3 = K_D^2
  const Rational r = m.r;
  return a * a * a * Rational(m.L3) + 3 * a * a * b * m.lambda * m.lambda * r +
         3 * a * b * b * m.lambda * r + b * b * b * r;
}

Integer contracting_multiple(const RankTwoPicardModel& m) {
  m.validate();
  const Rational a = -1 / m.lambda;
  if (denominator(a) != 1)
    throw DomainError("no integral contracting class: -1/lambda = " + a.str());
  return numerator(a);
}

Integer contraction_image_degree(const RankTwoPicardModel& m) {
  const Rational d = triple_product(m, Rational(contracting_multiple(m)), 1);
  return numerator(d);
}

Integer double_cover_euler(const FanoModel& f, const Integer& chi_c, const Integer& chi_d,
                           const Integer& chi_g) {
  return 2 * (f.chi_top + chi_c) - chi_d - chi_g;
}

Integer conifold_euler(const Integer& chi_smooth, int mu, bool resolved) {
  if (mu < 0) throw std::invalid_argument("node count must be >= 0");
  return chi_smooth + (resolved ? 2 : 1) * mu;
}

Integer contraction_euler(const Integer& chi_x, int r) {
  if (r < 1 || r > 9) throw std::invalid_argument("del Pezzo degree must lie in 1..9");
  return chi_x - chern::delpezzo_euler(r) + 1;
}

// ---------------------------------------------------------------------------

HodgeShiftTable::HodgeShiftTable()
    : rows_{{true, {29}}, {true, {17}}, {true, {11}}, {true, {7}}, {true, {4}},
            {true, {1, 2}}, {true, {1}}, {true, {1}}, {false, {}}} {}

const HodgeShiftTable& HodgeShiftTable::standard() {
  static const HodgeShiftTable table;
  return table;
}

const HodgeShift& HodgeShiftTable::at(int r) const {
  if (r < 1 || r > 9) throw std::invalid_argument("del Pezzo degree must lie in 1..9");
  return rows_[static_cast<std::size_t>(r - 1)];
}

HodgeShift hodge_shift(int r) { return HodgeShiftTable::standard().at(r); }

namespace {

const HodgeShift& smoothable_shift(int r) {
  const auto& s = HodgeShiftTable::standard().at(r);
  if (!s.smoothable)
    throw NotSmoothable("contraction of a degree-" + std::to_string(r) +
                        " del Pezzo surface is not smoothable");
  return s;
}

}  // namespace

std::vector<std::pair<Integer, Integer>> smoothing_hodge(const Integer& h11, const Integer& h12, int r) {
  const auto& s = smoothable_shift(r);
  if (h11 - 1 < 1)
    throw std::invalid_argument("h11 of the smoothing would be " + Integer(h11 - 1).str() +
                                "; a projective Calabi-Yau needs h11 >= 1");
  std::vector<std::pair<Integer, Integer>> out;
  for (int inc : s.increments) out.emplace_back(h11 - 1, h12 + inc);
  return out;
}

std::vector<Integer> smoothing_euler(const Integer& chi_x, int r) {
  std::vector<Integer> out;
  for (int inc : smoothable_shift(r).increments) out.push_back(chi_x - 2 - 2 * inc);
  return out;
}

Integer milnor_correction(int r) {
  if (r < 1 || r > 5) throw std::invalid_argument("milnor_correction is single-valued only for r in 1..5");
  return 9 - r - 2 * smoothable_shift(r).increments.at(0);
}

// ---------------------------------------------------------------------------

std::string to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::double_cover_fano: return "double-cover-fano";
    case ConstructionKind::double_cover_p3: return "double-cover-p3";
    case ConstructionKind::double_cover_quadric: return "double-cover-quadric";
    case ConstructionKind::quintic_ci: return "quintic-ci";
    case ConstructionKind::cubic_cubic_ci: return "cubic-cubic-ci";
  }
  return "?";
}

namespace {

HilbertData hd(std::vector<int> w, std::vector<int> d) { return {std::move(w), std::move(d)}; }
std::vector<int> ones(int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); }

RationalSeries general_numerator_form(int r) {
  return RationalSeries(IntPolynomial{1, r - 1, r, r - 1, 1}, ones(4));
}

ConstructionSpec fano_row(int r, HilbertData fiber, std::string image) {
  ConstructionSpec s{};
  s.tag = "c1-r" + std::to_string(r);
  s.kind = ConstructionKind::double_cover_fano;
  s.parameter = r;
  s.del_pezzo_degree = r;
  s.fano = FanoModel::index_two(r);
  s.d_multiple = 1;
  s.image_series = general_numerator_form(r);
  if (!fiber.weights.empty()) s.fiber = std::move(fiber);
  s.construction_label = "X' 2:1 over F_" + std::to_string(r);
  s.singular_label = "C_{3,1} in F_" + std::to_string(r);
  s.image_label = std::move(image);
  return s;
}

ConstructionSpec p3_row(int i, int r, RationalSeries image_series, std::optional<HilbertData> fiber,
                        int veronese, std::string image) {
  ConstructionSpec s{};
  s.tag = "c2-i" + std::to_string(i);
  s.kind = ConstructionKind::double_cover_p3;
  s.parameter = i;
  s.del_pezzo_degree = r;
  s.fano = FanoModel::projective_space();
  s.d_multiple = i;
  s.image_series = std::move(image_series);
  s.fiber = std::move(fiber);
  s.fiber_veronese = veronese;
  s.construction_label = "X' 2:1 over P^3";
  s.singular_label = "C_{" + std::to_string(8 - i) + "," + std::to_string(i) + "} in P^3";
  s.image_label = std::move(image);
  return s;
}

ConstructionSpec quadric_row(int m, int r, HilbertData fiber, int veronese, std::string singular,
                             std::string image) {
  ConstructionSpec s{};
  s.tag = "q3-m" + std::to_string(m);
  s.kind = ConstructionKind::double_cover_quadric;
  s.parameter = m;
  s.del_pezzo_degree = r;
  s.fano = FanoModel::quadric();
  s.d_multiple = m;
  s.fiber = std::move(fiber);
  s.fiber_veronese = veronese;
  s.construction_label = "X' 2:1 over Q3";
  s.singular_label = std::move(singular);
  s.image_label = std::move(image);
  return s;
}

ConstructionSpec nodal_row(std::string tag, ConstructionKind kind, HilbertData family, int mu, int r,
                           std::optional<HilbertData> fiber, std::string label, std::string image) {
  ConstructionSpec s{};
  s.tag = std::move(tag);
  s.kind = kind;
  s.parameter = r;
  s.del_pezzo_degree = r;
  s.nodal_family = std::move(family);
  s.mu = mu;
  s.fiber = std::move(fiber);
  s.construction_label = std::move(label);
  s.singular_label = std::to_string(mu) + " ODP";
  s.image_label = std::move(image);
  return s;
}

std::vector<ConstructionSpec> build_catalogue() {
  std::vector<ConstructionSpec> c;
  c.push_back(fano_row(1, hd({1, 1, 1, 1, 2}, {6}), "Y_6 in P(1,1,1,1,2)"));
  c.push_back(fano_row(2, hd({1, 1, 1, 1, 1, 2}, {3, 4}), "Y_{3,4} in P(1,1,1,1,1,2)"));
  c.push_back(fano_row(3, hd(ones(6), {3, 3}), "Y_{3,3} in P^5"));
  c.push_back(fano_row(4, hd(ones(7), {2, 2, 3}), "Y_{2,2,3} in P^6"));
  c.push_back(fano_row(5, HilbertData{}, "Y_{3,1,1} in G(2,5)"));
  c.back().fiber_in_g25 = true;

  c.push_back(p3_row(2, 8,
                     RationalSeries(IntPolynomial{1, 6, 1} * IntPolynomial::one_minus_power(3), ones(5)),
                     hd({1, 1, 1, 1, 2}, {6}), 2, "Y_6 in P(1,1,1,1,2)"));
  c.push_back(p3_row(1, 9, RationalSeries(IntPolynomial{1, 17, 27, 17, 1}, ones(4)), std::nullopt, 1,
                     "deg(63) in P^20"));
  c.push_back(p3_row(3, 3, RationalSeries(IntPolynomial::one_minus_power(5), ones(5)),
                     hd(ones(5), {5}), 1, "Y_5 in P^4"));

  c.push_back(quadric_row(2, 4, hd(ones(6), {2, 4}), 1, "C_{2,2,4} in P^4", "Y_{2,4} in P^5"));
  c.push_back(quadric_row(1, 8, hd(ones(5), {5}), 2, "C_{1,2,5} in P^4", "Y^2_5 in P^14"));

  const auto quintic = hd(ones(5), {5});
  const auto cubics = hd(ones(6), {3, 3});
  c.push_back(nodal_row("c3-deg3", ConstructionKind::quintic_ci, quintic, 24, 3, hd(ones(6), {2, 4}),
                        "X'_5 in P^4", "Y_{2,4} in P^5"));
  c.push_back(nodal_row("c3-deg4", ConstructionKind::quintic_ci, quintic, 36, 4, hd(ones(6), {3, 3}),
                        "X'_5 in P^4", "Y_{3,3} in P^5"));
  c.push_back(nodal_row("c4-deg5", ConstructionKind::cubic_cubic_ci, cubics, 28, 5, std::nullopt,
                        "X'_{3,3} in P^5", "7x7 Pfaffian in P^6"));
  c.push_back(nodal_row("c4-deg3", ConstructionKind::cubic_cubic_ci, cubics, 12, 3,
                        hd(ones(7), {2, 2, 3}), "X'_{3,3} in P^5", "Y_{2,2,3} in P^6"));
  c.push_back(nodal_row("c4-deg4", ConstructionKind::cubic_cubic_ci, cubics, 20, 4, std::nullopt,
                        "X'_{3,3} in P^5", "5x5 Pfaffian in P^6"));
  return c;
}

}  // namespace

const std::vector<ConstructionSpec>& construction_catalogue() {
  static const std::vector<ConstructionSpec> catalogue = build_catalogue();
  return catalogue;
}

const ConstructionSpec& construction(const std::string& tag) {
  for (const auto& s : construction_catalogue())
    if (s.tag == tag) return s;
  throw std::invalid_argument("unknown construction tag '" + tag + "'");
}

namespace {

bool is_double_cover(const ConstructionSpec& s) { return s.fano.has_value(); }

Integer ambient_h3(const HilbertData& family) {
  return series::image_degree(series::ci_hilbert_series(family), 3);
}

}  // namespace

RankTwoPicardModel picard_model(const ConstructionSpec& spec) {
  RankTwoPicardModel m;
  if (is_double_cover(spec)) {
    // D' in |mH| on F of index g: K_D = (m - g) H|_D
    const FanoModel& f = *spec.fano;
    const int a = f.index - spec.d_multiple;
    if (a < 1) throw std::invalid_argument("D' must have multiple below the Fano index");
    m.L3 = 2 * f.H3;
    m.lambda = Rational(-1, a);
    const Integer r = Integer(a) * a * spec.d_multiple * f.H3;
    m.r = r.convert_to<int>();
  } else {
    m.L3 = ambient_h3(*spec.nodal_family);
    m.lambda = -1;
    m.r = spec.del_pezzo_degree;
  }
  m.validate();
  return m;
}

EulerPipeline euler_pipeline(const ConstructionSpec& spec) {
  EulerPipeline p;
  const int r = spec.del_pezzo_degree;
  if (is_double_cover(spec)) {
    const FanoModel& f = *spec.fano;
    const int m_g = 2 * f.index - spec.d_multiple;  // D' + G' ~ -2K_F
    p.chi_d = chern::surface_euler_fano(f, spec.d_multiple);
    p.chi_g = chern::surface_euler_fano(f, m_g);
    p.chi_c = chern::curve_euler_ci_fano(f, m_g, spec.d_multiple);
    p.chi_smooth = f.chi_top;
    p.chi_x = double_cover_euler(f, *p.chi_c, *p.chi_d, *p.chi_g);
    p.steps.push_back("chi(D')=" + p.chi_d->str() + " chi(G')=" + p.chi_g->str() +
                      " chi(C)=" + p.chi_c->str() + " chi(F)=" + f.chi_top.str());
    p.steps.push_back("double_cover_euler -> " + p.chi_x.str());
  } else {
    p.chi_smooth = chern::ci_euler_weighted(*spec.nodal_family);
    p.chi_x = conifold_euler(p.chi_smooth, spec.mu, true);
    p.steps.push_back("ci_euler_weighted -> " + p.chi_smooth.str());
    p.steps.push_back("conifold_euler(mu=" + std::to_string(spec.mu) + ", resolved) -> " + p.chi_x.str());
  }
  p.chi_contracted = contraction_euler(p.chi_x, r);
  p.steps.push_back("contraction_euler(r=" + std::to_string(r) + ") -> " + p.chi_contracted.str());
  if (hodge_shift(r).smoothable) {
    const auto values = smoothing_euler(p.chi_x, r);
    if (values.size() != 1)
      throw InconsistentPipeline(spec.tag + ": smoothing Euler number is not single-valued");
    p.chi_smoothing = values[0];
    p.steps.push_back("smoothing_euler -> " + values[0].str());
  } else {
    p.steps.push_back("smoothing_euler: not smoothable");
  }
  return p;
}

namespace {

std::optional<RationalSeries> fiber_series(const ConstructionSpec& s) {
  if (s.fiber) return series::ci_hilbert_series(*s.fiber);
  if (s.fiber_in_g25) {
    // G(2,5): (1 - 5t^2 + 5t^3 - t^5)/(1-t)^10, cut by degrees 1, 1, 3
    return RationalSeries(IntPolynomial{1, 0, -5, 5, 0, -1} * IntPolynomial::one_minus_power(3), ones(8));
  }
  return std::nullopt;
}

void require(bool ok, const ConstructionSpec& s, const std::string& what) {
  if (!ok) throw InconsistentPipeline(s.tag + ": " + what);
}

Integer as_integer(const Rational& q) { return numerator(q); }

// c2.D = 12 - 2r for a del Pezzo D on a Calabi-Yau
RationalSeries riemann_roch_image(const ConstructionSpec& spec, const RankTwoPicardModel& model) {
  const Integer c2 = chern::ci_c2_dot_h(*spec.nodal_family) + 12 - 2 * spec.del_pezzo_degree;
  return series::cy3_series(contraction_image_degree(model), c2);
}

}  // namespace

RationalSeries resolved_image_series(const ConstructionSpec& spec) {
  if (spec.image_series) return *spec.image_series;
  if (auto fs = fiber_series(spec)) return series::veronese(*fs, spec.fiber_veronese);
  if (!is_double_cover(spec)) return riemann_roch_image(spec, picard_model(spec));
  throw InconsistentPipeline(spec.tag + ": no description of the image ring");
}

Table1Row table1_row(const ConstructionSpec& spec) {
  Table1Row row;
  row.tag = spec.tag;
  row.deg_d = spec.del_pezzo_degree;
  row.construction = spec.construction_label;
  row.singular_locus = spec.singular_label;
  row.image_tag = spec.image_label;

  const RankTwoPicardModel model = picard_model(spec);
  require(model.r == spec.del_pezzo_degree, spec, "del Pezzo degree from the model is " + std::to_string(model.r));
  row.consistency.push_back("del-pezzo-degree:model");

  const EulerPipeline p = euler_pipeline(spec);
  row.chi_x = p.chi_x;
  row.chi_smoothing = p.chi_smoothing;
  if (p.chi_d) {
    require(*p.chi_d == chern::delpezzo_euler(spec.del_pezzo_degree), spec,
            "chi(D') disagrees with the del Pezzo value");
    row.consistency.push_back("euler:del-pezzo");
  }
  if (p.chi_smoothing && spec.del_pezzo_degree <= 5) {
    require(*p.chi_smoothing - p.chi_contracted == milnor_correction(spec.del_pezzo_degree), spec,
            "Milnor correction mismatch");
    row.consistency.push_back("euler:milnor");
  }
  if (spec.fiber || spec.fiber_in_g25) {
    const Integer fiber_chi = spec.fiber ? chern::ci_euler_weighted(*spec.fiber)
                                         : chern::ci_euler_ambient(chern::AmbientChernData::grassmannian_g25(), {3, 1, 1});
    require(p.chi_smoothing && *p.chi_smoothing == fiber_chi, spec,
            "smoothing Euler number differs from the fiber's " + fiber_chi.str());
    row.consistency.push_back("euler:fiber");
  }

  // Image ring: closed-form series, else the fiber's (Veronese) ring, else
  // Riemann-Roch on the Calabi-Yau contraction image.
  row.image_degree = contraction_image_degree(model);
  const auto fs = fiber_series(spec);
  std::optional<RationalSeries> image = spec.image_series;
  if (fs) {
    const RationalSeries v = series::veronese(*fs, spec.fiber_veronese);
    if (image) {
      require(series::series_equal(*image, v), spec, "image series differs from the fiber ring");
      row.consistency.push_back("series:image=fiber");
    } else {
      image = v;
    }
  }
  if (!is_double_cover(spec)) {
    const RationalSeries rr = riemann_roch_image(spec, model);
    if (image) {
      require(series::series_equal(*image, rr), spec, "Riemann-Roch series differs from the image series");
      row.consistency.push_back("series:riemann-roch");
    } else {
      image = rr;
    }
  }
  require(image.has_value(), spec, "no description of the image ring");
  require(series::image_degree(*image, 3) == row.image_degree, spec,
          "image degree from the Picard model differs from the series");
  row.consistency.push_back("degree:picard=series");
  require(as_integer(triple_product(model, Rational(contracting_multiple(model)), 1)) == row.image_degree,
          spec, "triple product mismatch");
  row.embedding_dimension = series::embedding_dimension(*image);
  if (spec.kind == ConstructionKind::double_cover_fano) {
    require(series::section_dims_construction1(spec.parameter, 1) - 1 == row.embedding_dimension, spec,
            "embedding dimension differs from h^0 formula");
    row.consistency.push_back("embedding:sections");
  }
  return row;
}

std::vector<Table1Row> table1() {
  std::vector<Table1Row> rows;
  for (const auto& s : construction_catalogue()) rows.push_back(table1_row(s));
  return rows;
}

namespace {

nlohmann::json int_json(const Integer& n) { return n.convert_to<long long>(); }

}  // namespace

nlohmann::json Table1Row::to_json() const {
  return {{"tag", tag},
          {"degD", deg_d},
          {"construction", construction},
          {"singular_locus", singular_locus},
          {"chi_smoothing", chi_smoothing ? int_json(*chi_smoothing) : nlohmann::json(nullptr)},
          {"image_tag", image_tag},
          {"chi_x", int_json(chi_x)},
          {"image_degree", int_json(image_degree)},
          {"embedding_dimension", int_json(embedding_dimension)},
          {"consistency", consistency}};
}

std::vector<Table3Row> table3() {
  static const char* d_names[] = {"P2", "P1xP1", "cubic"};
  static const char* g_names[] = {"septic", "sextic", "quintic"};
  std::vector<Table3Row> rows;
  for (int i = 1; i <= 3; ++i) {
    const auto p = euler_pipeline(construction("c2-i" + std::to_string(i)));
    rows.push_back({i, d_names[i - 1], g_names[i - 1], *p.chi_d, *p.chi_g, *p.chi_c, p.chi_x, p.chi_smoothing});
  }
  return rows;
}

nlohmann::json Table3Row::to_json() const {
  return {{"i", i},
          {"D", d_name},
          {"G", g_name},
          {"chi_D", int_json(chi_d)},
          {"chi_G", int_json(chi_g)},
          {"chi_C", int_json(chi_c)},
          {"chi_X", int_json(chi_x)},
          {"chi_smoothing", chi_smoothing ? int_json(*chi_smoothing) : nlohmann::json(nullptr)}};
}

}  // namespace cyc::contraction
