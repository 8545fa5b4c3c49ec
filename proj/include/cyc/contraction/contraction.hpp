#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cyc/chern/chern.hpp"
#include "cyc/series/series.hpp"

namespace cyc::contraction {

using chern::FanoModel;
using series::HilbertData;
using series::RationalSeries;

/// Rank-two lattice spanned by an auxiliary class L and a del Pezzo divisor D
/// of degree r, with L|_D = lambda K_D and D|_D = K_D.
struct RankTwoPicardModel {
  Integer L3;
  Rational lambda;
  int r = 0;

  /// Throws std::invalid_argument unless 1 <= r <= 9 and lambda < 0.
  void validate() const;
};

/// (aL + bD)^3
Rational triple_product(const RankTwoPicardModel& m, const Rational& a, const Rational& b);

/// a = -1/lambda; throws DomainError when it is not an integer.
Integer contracting_multiple(const RankTwoPicardModel& m);

/// (aL + D)^3 = a^3 L^3 + r for the contracting multiple a.
Integer contraction_image_degree(const RankTwoPicardModel& m);

/// Double cover of F branched along D' + G', resolved over C = D' . G'.
Integer double_cover_euler(const FanoModel& f, const Integer& chi_c, const Integer& chi_d,
                           const Integer& chi_g);

/// Nodal threefold (chi + mu) or its small resolution (chi + 2 mu).
Integer conifold_euler(const Integer& chi_smooth, int mu, bool resolved);

/// Euler number after contracting a del Pezzo surface of degree r to a point.
Integer contraction_euler(const Integer& chi_x, int r);

class NotSmoothable : public Error {
 public:
  using Error::Error;
};

struct HodgeShift {
  bool smoothable = false;
  std::vector<int> increments;  // possible changes of h^{1,2}
};

/// h^{1,2} increments when smoothing the contraction of a degree-r del Pezzo.
class HodgeShiftTable {
 public:
  static const HodgeShiftTable& standard();
  /// Throws std::invalid_argument for r outside 1..9.
  const HodgeShift& at(int r) const;

 private:
  HodgeShiftTable();
  std::vector<HodgeShift> rows_;  // index r-1
};

HodgeShift hodge_shift(int r);

/// {(h11 - 1, h12 + s)}. Throws NotSmoothable, or std::invalid_argument when
/// h11 - 1 < 1.
std::vector<std::pair<Integer, Integer>> smoothing_hodge(const Integer& h11, const Integer& h12, int r);

/// {chi - 2 - 2s}; throws NotSmoothable.
std::vector<Integer> smoothing_euler(const Integer& chi_x, int r);

/// chi(smoothing) - chi(contraction) = 9 - r - 2s, r in 1..5.
Integer milnor_correction(int r);

// ---------------------------------------------------------------------------

enum class ConstructionKind {
  double_cover_fano,     // over an index-two Fano threefold of degree r
  double_cover_p3,       // over P^3, D' of degree i
  double_cover_quadric,  // over Q3, D' in |m H|
  quintic_ci,            // nodal quintic containing a del Pezzo
  cubic_cubic_ci         // nodal intersection of two cubics containing a del Pezzo
};

std::string to_string(ConstructionKind k);

struct ConstructionSpec {
  std::string tag;  // e.g. "c1-r3", "c2-i1", "q3-m2", "c3-deg4", "c4-deg5"
  ConstructionKind kind;
  int parameter = 0;  // r, i, m or the del Pezzo degree of the nodal rows
  int del_pezzo_degree = 0;

  // double covers: the Fano base and the divisor class multiple of D'
  std::optional<FanoModel> fano;
  int d_multiple = 0;

  // nodal rows: the smooth ambient family and its node count
  std::optional<HilbertData> nodal_family;
  int mu = 0;

  /// Graded ring of the contraction image, where it is known in closed form.
  std::optional<RationalSeries> image_series;

  /// Smooth fiber of the smoothing, when it is a complete intersection.
  std::optional<HilbertData> fiber;
  bool fiber_in_g25 = false;  // fiber is a section of G(2,5) by degrees (3,1,1)
  int fiber_veronese = 1;     // image ring = this Veronese of the fiber ring

  std::string construction_label;
  std::string singular_label;
  std::string image_label;
};

/// The fifteen constructions in table order.
const std::vector<ConstructionSpec>& construction_catalogue();
const ConstructionSpec& construction(const std::string& tag);

/// Contraction data for a construction.
RankTwoPicardModel picard_model(const ConstructionSpec& spec);

/// Series of the image ring: the closed form if present, else the fiber
/// ring's Veronese, else Riemann-Roch on the contraction image (nodal rows).
RationalSeries resolved_image_series(const ConstructionSpec& spec);

struct EulerPipeline {
  std::optional<Integer> chi_d, chi_g, chi_c;  // double covers only
  Integer chi_smooth;                           // nodal rows: smooth member
  Integer chi_x;                                // smooth model containing D
  Integer chi_contracted;                       // after contracting D
  std::optional<Integer> chi_smoothing;         // none when not smoothable
  std::vector<std::string> steps;               // human-readable chain
};

EulerPipeline euler_pipeline(const ConstructionSpec& spec);

class InconsistentPipeline : public Error {
 public:
  using Error::Error;
};

struct Table1Row {
  std::string tag;
  int deg_d = 0;
  std::string construction;
  std::string singular_locus;
  std::optional<Integer> chi_smoothing;
  std::string image_tag;
  Integer chi_x;
  Integer image_degree;
  Integer embedding_dimension;
  std::vector<std::string> consistency;

  nlohmann::json to_json() const;
};

/// Runs every pipeline and cross-check; throws InconsistentPipeline when two
/// independent computations disagree.
Table1Row table1_row(const ConstructionSpec& spec);
std::vector<Table1Row> table1();

struct Table3Row {
  int i = 0;
  std::string d_name, g_name;
  Integer chi_d, chi_g, chi_c, chi_x;
  std::optional<Integer> chi_smoothing;

  nlohmann::json to_json() const;
};

/// Double covers of P^3 with D' of degree i = 1, 2, 3.
std::vector<Table3Row> table3();

}  // namespace cyc::contraction
