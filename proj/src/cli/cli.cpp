#include "cyc/cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyc/algebra/poly.hpp"
#include "cyc/chern/chern.hpp"
#include "cyc/contraction/contraction.hpp"
#include "cyc/groebner/nodes.hpp"
#include "cyc/pfaffian/pfaffian.hpp"
#include "cyc/series/series.hpp"
#include "embedded_data.hpp"

namespace cyc::cli {

namespace {

using nlohmann::json;
namespace ct = contraction;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json int_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return n.convert_to<std::int64_t>();
  return n.str();
}

std::string show(const json& j) { return j.is_null() ? "-" : j.dump(); }

const json& expected() {
  static const json data = json::parse(data::kExpected);
  return data;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::uint32_t default_prime() {
  const char* env = std::getenv("CYC_PRIME");
  if (!env || !*env) return algebra::kDefaultPrime;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0 || v >= (1ULL << 31)) throw UsageError("CYC_PRIME must be a prime below 2^31");
  return static_cast<std::uint32_t>(v);
}

void check_prime(std::uint32_t p) {
  if (!algebra::is_prime(p) || p >= (1U << 31)) throw UsageError("--prime must be a prime below 2^31");
}

Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw UsageError("not a rational number: '" + s + "'");
  }
}

struct Mismatches {
  std::vector<std::string> lines;
  void add(const std::string& where, const std::string& field, const json& want, const json& got,
           const std::string& provenance = {}) {
    std::string s = where + " " + field + ": expected " + show(want) + ", computed " + show(got);
    if (!provenance.empty()) s += "  [" + provenance + "]";
    lines.push_back(std::move(s));
  }
  int report(std::ostream& err) const {
    for (const auto& l : lines) err << "mismatch: " << l << "\n";
    return lines.empty() ? kExitOk : kExitMismatch;
  }
};

std::string chain_of(const json& e) {
  std::string s;
  if (e.contains("provenance") && e["provenance"].contains("chain"))
    for (const auto& step : e["provenance"]["chain"]) s += (s.empty() ? "" : " -> ") + step.get<std::string>();
  return s;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

// --- table1 ---------------------------------------------------------------

int cmd_table1(const std::string& format, std::ostream& out, std::ostream& err) {
  const auto& specs = ct::construction_catalogue();
  std::vector<std::future<ct::Table1Row>> jobs;
  for (const auto& s : specs) jobs.push_back(std::async(std::launch::async, [&s] { return ct::table1_row(s); }));
  std::vector<ct::Table1Row> rows;
  for (auto& j : jobs) rows.push_back(j.get());

  Mismatches mm;
  json arr = json::array();
  for (const auto& row : rows) {
    json j = row.to_json();
    const json& e = expected()["table1"].at(row.tag);
    const json chi = row.chi_smoothing ? int_json(*row.chi_smoothing) : json(nullptr);
    if (chi != e["chi_smoothing"]) mm.add(row.tag, "chi_smoothing", e["chi_smoothing"], chi, chain_of(e));
    if (int_json(row.image_degree) != e["image_degree"])
      mm.add(row.tag, "image_degree", e["image_degree"], int_json(row.image_degree));
    if (int_json(row.embedding_dimension) != e["embedding_dimension"])
      mm.add(row.tag, "embedding_dimension", e["embedding_dimension"], int_json(row.embedding_dimension));
    if (row.image_tag != e["image_tag"]) mm.add(row.tag, "image_tag", e["image_tag"], row.image_tag);
    if (e.contains("notes")) j["notes"] = e["notes"];
    arr.push_back(std::move(j));
  }

  if (format == "tsv") {
    out << "degD\tconstruction\tsingular_locus\tchi_smoothing\timage_tag\tconsistency\n";
    for (const auto& row : rows)
      out << row.deg_d << '\t' << row.construction << '\t' << row.singular_locus << '\t'
          << (row.chi_smoothing ? row.chi_smoothing->str() : "-") << '\t' << row.image_tag << '\t'
          << join(row.consistency, ",") << '\n';
  } else {
    out << arr.dump(2) << '\n';
  }
  return mm.report(err);
}

// --- table3 ---------------------------------------------------------------

int cmd_table3(const std::string& format, std::ostream& out, std::ostream& err) {
  Mismatches mm;
  json arr = json::array();
  std::vector<std::string> errata;
  for (const auto& row : ct::table3()) {
    json j = row.to_json();
    const json& e = expected()["table3"].at(static_cast<std::size_t>(row.i - 1));
    const std::string where = "i=" + std::to_string(row.i);
    for (const char* f : {"chi_D", "chi_G", "chi_C", "chi_X"})
      if (j[f] != e[f]) mm.add(where, f, e[f], j[f]);
    std::string note = "-";
    if (e.contains("erratum")) {
      const json& er = e["erratum"];
      if (j[er["field"].get<std::string>()] == er["computed"]) {
        j["erratum"] = er;
        note = er["field"].get<std::string>() + " printed " + show(er["printed"]) + ", computed " +
               show(er["computed"]);
      }
    }
    errata.push_back(note);
    arr.push_back(std::move(j));
  }
  if (format == "tsv") {
    out << "i\tD\tG\tchi_D\tchi_G\tchi_C\tchi_X\tchi_smoothing\terratum\n";
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const json& j = arr[k];
      out << j["i"] << '\t' << j["D"].get<std::string>() << '\t' << j["G"].get<std::string>() << '\t'
          << j["chi_D"] << '\t' << j["chi_G"] << '\t' << j["chi_C"] << '\t' << j["chi_X"] << '\t'
          << show(j["chi_smoothing"]) << '\t' << errata[k] << '\n';
    }
  } else {
    out << arr.dump(2) << '\n';
  }
  return mm.report(err);
}

// --- hilbert --------------------------------------------------------------

std::string resolve_tag(const std::string& construction, int r, int i, int m) {
  auto need = [&](int v, const char* flag) {
    if (v == 0) throw UsageError("--construction " + construction + " needs " + flag);
    return std::to_string(v);
  };
  if (construction == "c1") return "c1-r" + need(r, "--r");
  if (construction == "c2") return "c2-i" + need(i, "--i");
  if (construction == "q3") return "q3-m" + need(m, "--m");
  return construction;
}

const ct::ConstructionSpec& lookup(const std::string& tag) {
  try {
    return ct::construction(tag);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string weights_label(const std::vector<int>& w) {
  bool standard = true;
  for (int x : w) standard = standard && x == 1;
  if (standard) return "P^" + std::to_string(w.size() - 1);
  std::string s = "P(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s + ")";
}

int cmd_hilbert(const std::string& construction, int r, int i, int m, const std::vector<int>& weights,
                const std::vector<int>& degrees, int terms, std::ostream& out, std::ostream& err) {
  if (terms < 1) throw UsageError("--terms must be >= 1");
  if (!construction.empty()) {
    const auto& spec = lookup(resolve_tag(construction, r, i, m));
    const auto row = ct::table1_row(spec);  // throws on any cross-check failure
    const auto s = ct::resolved_image_series(spec);
    json j = {{"construction", spec.tag},
              {"series", series::to_json(s, terms)},
              {"degree", int_json(series::image_degree(s, 3))},
              {"embedding_dimension", int_json(row.embedding_dimension)},
              {"ambient", "P^" + row.embedding_dimension.str()},
              {"image_tag", spec.image_label},
              {"consistency", row.consistency}};
    Mismatches mm;
    if (spec.kind == ct::ConstructionKind::double_cover_fano) {
      const auto c = series::series_coefficients(s, terms);
      bool ok = true;
      for (int n = 0; n <= terms; ++n)
        if (c[static_cast<std::size_t>(n)] != series::section_dims_construction1(spec.parameter, n)) {
          mm.add(spec.tag, "h0(" + std::to_string(n) + "G)", int_json(series::section_dims_construction1(spec.parameter, n)),
                 int_json(c[static_cast<std::size_t>(n)]));
          ok = false;
        }
      j["section_dims_match"] = ok;
    }
    out << j.dump(2) << '\n';
    return mm.report(err);
  }
  if (weights.empty()) throw UsageError("hilbert needs --construction or --weights/--degrees");
  series::HilbertData h{weights, degrees};
  try {
    h.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (h.dimension() < 0) throw UsageError("more equations than the ambient dimension allows");
  const auto s = series::ci_hilbert_series(h);
  Rational deg = 1;
  for (int d : degrees) deg *= d;
  for (int w : weights) deg /= w;
  json j = {{"series", series::to_json(s, terms)},
            {"dimension", h.dimension()},
            {"degree", denominator(deg) == 1 ? int_json(numerator(deg)) : json(deg.str())},
            {"ambient", weights_label(weights)}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

// --- chern ----------------------------------------------------------------

chern::FanoModel fano_by_name(const std::string& name) {
  if (name == "P3") return chern::FanoModel::projective_space();
  if (name == "Q3") return chern::FanoModel::quadric();
  if (name.size() == 2 && name[0] == 'V' && name[1] >= '1' && name[1] <= '5') return chern::FanoModel::index_two(name[1] - '0');
  throw UsageError("unknown Fano model '" + name + "' (P3, Q3, V1..V5)");
}

int cmd_chern(const std::vector<int>& weights, const std::vector<int>& degrees, const std::string& ambient,
              const std::string& fano, int surface, const std::vector<int>& curve, int del_pezzo,
              std::ostream& out) {
  json j = json::object();
  if (!weights.empty()) {
    const series::HilbertData h{weights, degrees};
    try {
      j["euler"] = int_json(chern::ci_euler_weighted(h));
      j["c2_dot_h"] = int_json(chern::ci_c2_dot_h(h));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (!ambient.empty()) {
    const auto a = ambient == "g25" ? chern::AmbientChernData::grassmannian_g25()
                                    : chern::AmbientChernData::parse(read_file(ambient));
    j["ambient_euler"] = int_json(chern::ci_euler_ambient(a, degrees));
  }
  if (!fano.empty()) {
    const chern::FanoModel f = fano_by_name(fano);
    j["fano"] = {{"name", f.name}, {"index", f.index}, {"H3", int_json(f.H3)},
                 {"Hc2", int_json(f.Hc2)}, {"chi_top", int_json(f.chi_top)}};
    if (surface) j["surface_euler"] = int_json(chern::surface_euler_fano(f, surface));
    if (!curve.empty()) {
      if (curve.size() != 2) throw UsageError("--curve takes two multiples a,b");
      j["curve_euler"] = int_json(chern::curve_euler_ci_fano(f, curve[0], curve[1]));
    }
  } else if (surface || !curve.empty()) {
    throw UsageError("--surface and --curve need --fano");
  }
  if (del_pezzo) j["del_pezzo_euler"] = int_json(chern::delpezzo_euler(del_pezzo));
  if (j.empty()) throw UsageError("chern: nothing requested");
  out << j.dump(2) << '\n';
  return kExitOk;
}

// --- euler-pipeline -------------------------------------------------------

int cmd_euler(const std::string& tag, std::ostream& out, std::ostream& err) {
  const auto& spec = lookup(tag);
  const auto p = ct::euler_pipeline(spec);
  auto opt = [](const std::optional<Integer>& v) { return v ? int_json(*v) : json(nullptr); };
  json j = {{"construction", spec.tag},
            {"kind", ct::to_string(spec.kind)},
            {"del_pezzo_degree", spec.del_pezzo_degree},
            {"chi_D", opt(p.chi_d)},
            {"chi_G", opt(p.chi_g)},
            {"chi_C", opt(p.chi_c)},
            {"chi_smooth", int_json(p.chi_smooth)},
            {"chi_X", int_json(p.chi_x)},
            {"chi_contracted", int_json(p.chi_contracted)},
            {"chi_smoothing", opt(p.chi_smoothing)},
            {"steps", p.steps}};
  const json& e = expected()["table1"].at(spec.tag);
  j["expected"] = e["chi_smoothing"];
  j["match"] = j["chi_smoothing"] == e["chi_smoothing"];
  out << j.dump(2) << '\n';
  Mismatches mm;
  if (!j["match"].get<bool>()) mm.add(spec.tag, "chi_smoothing", e["chi_smoothing"], j["chi_smoothing"], chain_of(e));
  return mm.report(err);
}

// --- picard ---------------------------------------------------------------

int cmd_picard(const std::string& tag, const std::string& l3, const std::string& lambda, int r,
               const std::string& a, const std::string& b, std::ostream& out, std::ostream& err) {
  ct::RankTwoPicardModel m;
  const ct::ConstructionSpec* spec = nullptr;
  if (!tag.empty()) {
    spec = &lookup(tag);
    m = ct::picard_model(*spec);
  } else {
    if (l3.empty() || lambda.empty() || r == 0) throw UsageError("picard needs --construction or --L3, --lambda, --r");
    try {
      m.L3 = Integer(l3);
    } catch (const std::exception&) {
      throw UsageError("--L3 must be an integer");
    }
    m.lambda = parse_rational(lambda);
    m.r = r;
    try {
      m.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  json j = {{"L3", int_json(m.L3)}, {"lambda", m.lambda.str()}, {"r", m.r}};
  if (spec) j["construction"] = spec->tag;
  try {
    j["contracting_multiple"] = int_json(ct::contracting_multiple(m));
    j["image_degree"] = int_json(ct::contraction_image_degree(m));
  } catch (const DomainError& e) {
    j["contracting_multiple"] = nullptr;
    j["image_degree"] = nullptr;
    j["detail"] = e.what();
  }
  if (!a.empty() || !b.empty()) {
    const Rational qa = parse_rational(a.empty() ? "0" : a), qb = parse_rational(b.empty() ? "0" : b);
    j["triple_product"] = ct::triple_product(m, qa, qb).str();
  }
  Mismatches mm;
  if (spec) {
    const json& want = expected()["table1"].at(spec->tag)["image_degree"];
    j["expected_image_degree"] = want;
    if (j["image_degree"] != want) mm.add(spec->tag, "image_degree", want, j["image_degree"]);
  }
  out << j.dump(2) << '\n';
  return mm.report(err);
}

// --- nodes ----------------------------------------------------------------

int cmd_nodes(const std::string& tag, std::uint32_t prime, std::uint64_t seed, int seeds, std::uint64_t budget,
              bool timing, std::ostream& out, std::ostream& err) {
  groebner::NodeConstruction c;
  try {
    c = groebner::parse_node_construction(tag);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (seeds < 1) throw UsageError("--seeds must be >= 1");
  std::vector<std::future<groebner::NodeReport>> jobs;
  for (int k = 0; k < seeds; ++k)
    jobs.push_back(std::async(std::launch::async, [=] {
      return groebner::verify_nodes(c, prime, seed + static_cast<std::uint64_t>(k), budget);
    }));
  std::vector<groebner::NodeReport> reports;
  for (int k = 0; k < seeds; ++k) {
    reports.push_back(jobs[static_cast<std::size_t>(k)].get());
    const auto& r = reports.back();
    err << "nodes: " << tag << " seed " << r.seed << ": " << r.status;
    if (r.degree) err << " (degree " << *r.degree << ")";
    err << '\n';
  }
  Mismatches mm;
  json runs = json::array();
  bool stable = true;
  for (const auto& r : reports) {
    runs.push_back(r.to_json(timing));
    stable = stable && r.degree == reports.front().degree;
    if (r.status != "ok") {
      mm.add(tag + " seed " + std::to_string(r.seed), "nodes", r.expected,
             r.degree ? json(*r.degree) : json(nullptr), r.status + (r.detail.empty() ? "" : ": " + r.detail));
    }
  }
  if (seeds == 1) {
    out << runs[0].dump(2) << '\n';
  } else {
    out << json{{"construction", tag}, {"runs", runs}, {"seed_stable", stable}}.dump(2) << '\n';
    if (!stable) mm.lines.push_back(tag + ": degrees differ across seeds");
  }
  return mm.report(err);
}

// --- pfaffian-check -------------------------------------------------------

pfaffian::BorderedPfaffian bordered_from_file(const std::string& path, std::size_t vars, std::uint32_t prime) {
  const algebra::Ring ring(vars, algebra::Domain::prime_field(prime));
  const auto n = pfaffian::SkewMatrix::parse(read_file(path), ring, 7);
  pfaffian::SkewMatrix block(ring, 5);
  std::vector<algebra::MultiPoly> l, t;
  for (std::size_t i = 0; i < 5; ++i) {
    t.push_back(n.entry(0, i + 2));
    l.push_back(n.entry(1, i + 2));
    for (std::size_t j = i + 1; j < 5; ++j) block.set(i, j, n.entry(i + 2, j + 2));
  }
  return pfaffian::build_bordered(block, std::move(l), std::move(t), n.entry(0, 1));
}

json check_json(const pfaffian::BorderedPfaffian& b, const pfaffian::ExpansionReport& rep) {
  const auto subs = pfaffian::maximal_sub_pfaffians(b.matrix);
  json degs = json::array();
  for (std::size_t k = 0; k < 2; ++k)
    degs.push_back(subs[k].is_zero() ? json(nullptr) : json(algebra::weighted_degree(subs[k])));
  const json& e = expected()["pfaffian"];
  const json ls = rep.l_signs, ts = rep.t_signs;
  return {{"holds", rep.holds},
          {"l_signs", ls},
          {"t_signs", ts},
          {"signs_match_display", rep.holds && ls == e["l_signs"] && ts == e["t_signs"]},
          {"border_pfaffian_degrees", degs}};
}

int cmd_pfaffian(std::uint32_t prime, std::uint64_t seed, int seeds, const std::string& matrix, int vars,
                 std::ostream& out, std::ostream& err) {
  Mismatches mm;
  json runs = json::array();
  if (!matrix.empty()) {
    if (vars < 1) throw UsageError("--vars must be >= 1");
    const auto b = bordered_from_file(matrix, static_cast<std::size_t>(vars), prime);
    json j = check_json(b, pfaffian::expansion_identity_check(b));
    j["matrix"] = matrix;
    if (!j["holds"].get<bool>()) mm.lines.push_back(matrix + ": expansion identity fails");
    runs.push_back(std::move(j));
  } else {
    if (seeds < 1) throw UsageError("--seeds must be >= 1");
    const algebra::Ring ring(6, algebra::Domain::prime_field(prime));
    for (int k = 0; k < seeds; ++k) {
      const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
      const auto b = pfaffian::random_bordered(ring, s);
      json j = check_json(b, pfaffian::expansion_identity_check(b));
      json head = {{"seed", s}, {"prime", prime}};
      head.update(j);
      j = std::move(head);
      if (!j["holds"].get<bool>()) mm.lines.push_back("seed " + std::to_string(s) + ": expansion identity fails");
      runs.push_back(std::move(j));
    }
  }
  out << (runs.size() == 1 ? runs[0] : runs).dump(2) << '\n';
  return mm.report(err);
}

// --- defect ---------------------------------------------------------------

int cmd_defect(const std::string& which, std::uint32_t prime, std::uint64_t seed, std::uint64_t budget,
               std::ostream& out, std::ostream& err) {
  std::vector<groebner::DefectReport> reports;
  if (which == "quintic" || which == "all") reports.push_back(groebner::quintic_defect(prime, seed));
  if (which == "pfaffian-cubics" || which == "all") reports.push_back(groebner::pfaffian_cubic_defect(prime, seed, budget));
  Mismatches mm;
  json arr = json::array();
  for (const auto& d : reports) {
    json j = d.to_json();
    const json& e = expected()["defect"].at(d.name);
    for (const char* f : {"ambient_dim", "ideal_dim", "series_hf", "delta"})
      if (e.contains(f) && j.contains(f) && j[f] != e[f]) mm.add(d.name, f, e[f], j[f], e["provenance"]);
    j["expected_delta"] = e["delta"];
    j["match"] = j["delta"] == e["delta"] && j["ideal_dim"] == e["ideal_dim"];
    arr.push_back(std::move(j));
  }
  out << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  return mm.report(err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification toolkit for primitive contractions of Calabi-Yau threefolds", "cyc"};
  app.require_subcommand(1, 1);

  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  };
  std::uint32_t prime = 0;
  std::uint64_t seed = 1, budget = groebner::kDefaultBudget;
  int seeds = 1;
  bool timing = false;
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--prime", prime, "prime field characteristic (default: $CYC_PRIME or 32003)");
    sub->add_option("--seed", seed, "first seed");
  };

  auto* t1 = app.add_subcommand("table1", "regenerate the table of constructions");
  add_format(t1);
  auto* t3 = app.add_subcommand("table3", "Euler numbers of the double covers of P^3");
  add_format(t3);

  std::string construction, ambient, fano, tag, l3, lambda, a, b, which = "all", matrix;
  int r = 0, i = 0, m = 0, terms = 10, surface = 0, del_pezzo = 0, vars = 6;
  std::vector<int> weights, degrees, curve;

  auto* hil = app.add_subcommand("hilbert", "Hilbert series of an image ring or a complete intersection");
  hil->add_option("--construction", construction, "c1, c2, q3 or a full construction tag");
  hil->add_option("--r", r, "del Pezzo degree for c1");
  hil->add_option("--i", i, "degree of D' for c2");
  hil->add_option("--m", m, "multiple of D' for q3");
  hil->add_option("--weights", weights)->delimiter(',');
  hil->add_option("--degrees", degrees)->delimiter(',');
  hil->add_option("--terms", terms, "number of coefficients after c_0");

  auto* ch = app.add_subcommand("chern", "Chern-class computations");
  ch->add_option("--weights", weights)->delimiter(',');
  ch->add_option("--degrees", degrees)->delimiter(',');
  ch->add_option("--ambient", ambient, "g25 or a Chern data file");
  ch->add_option("--fano", fano, "P3, Q3, V1..V5");
  ch->add_option("--surface", surface, "Euler number of a smooth member of |mH|");
  ch->add_option("--curve", curve, "Euler number of a smooth |aH|.|bH| curve")->delimiter(',');
  ch->add_option("--del-pezzo", del_pezzo, "Euler number of a del Pezzo surface of degree r");

  auto* eu = app.add_subcommand("euler-pipeline", "Euler-number chain of one construction");
  eu->add_option("--construction", tag)->required();

  auto* pic = app.add_subcommand("picard", "rank-two Picard model intersection numbers");
  pic->add_option("--construction", tag);
  pic->add_option("--L3", l3);
  pic->add_option("--lambda", lambda);
  pic->add_option("--r", r);
  pic->add_option("--a", a);
  pic->add_option("--b", b);

  auto* nod = app.add_subcommand("nodes", "count the nodes of a construction by Groebner bases");
  nod->add_option("--construction", tag)->required();
  add_field(nod);
  nod->add_option("--seeds", seeds, "number of consecutive seeds");
  nod->add_option("--budget", budget, "reduction budget");
  nod->add_flag("--timing", timing, "include runtime_ms");

  auto* pf = app.add_subcommand("pfaffian-check", "expansion identities of the bordered 7x7 matrix");
  add_field(pf);
  pf->add_option("--seeds", seeds);
  pf->add_option("--matrix", matrix, "7x7 matrix file, lines 'i j : poly'");
  pf->add_option("--vars", vars, "variable count for --matrix");

  auto* def = app.add_subcommand("defect", "defect of the nodal quintic and the Pfaffian cubic pair");
  def->add_option("--case", which)->check(CLI::IsMember({"quintic", "pfaffian-cubics", "all"}));
  add_field(def);
  def->add_option("--budget", budget);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (!prime) prime = default_prime();
    check_prime(prime);
    if (*t1) return cmd_table1(format, out, err);
    if (*t3) return cmd_table3(format, out, err);
    if (*hil) return cmd_hilbert(construction, r, i, m, weights, degrees, terms, out, err);
    if (*ch) return cmd_chern(weights, degrees, ambient, fano, surface, curve, del_pezzo, out);
    if (*eu) return cmd_euler(tag, out, err);
    if (*pic) return cmd_picard(tag, l3, lambda, r, a, b, out, err);
    if (*nod) return cmd_nodes(tag, prime, seed, seeds, budget, timing, out, err);
    if (*pf) return cmd_pfaffian(prime, seed, seeds, matrix, vars, out, err);
    if (*def) return cmd_defect(which, prime, seed, budget, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ct::InconsistentPipeline& e) {
    err << "mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace cyc::cli
