#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cyc/groebner/groebner.hpp"

namespace cyc::groebner {

/// Nodal threefolds whose singular points are counted:
///   c3_deg4  quintic f1*g1 + f2*g2 (quadrics f, cubics g) in P^4
///   c3_deg3  quintic c*g1 + l*g2 (cubic, linear, quadric, quartic) in P^4
///   c4_deg5  two cubics given by sub-Pfaffians of a bordered 7x7 matrix in P^5
///   c4_deg3  two cubics a_k*h1 + b_k*h2 + e_k*c in P^5
///   c4_deg4  two cubics a_k*h + b_k*q1 + e_k*q2 in P^5
enum class NodeConstruction { c3_deg4, c3_deg3, c4_deg5, c4_deg3, c4_deg4 };

const std::vector<NodeConstruction>& all_node_constructions();
std::string to_string(NodeConstruction c);
/// Accepts the tags "c3-deg4", ...; throws std::invalid_argument otherwise.
NodeConstruction parse_node_construction(std::string_view tag);
int expected_nodes(NodeConstruction c);

/// Homogeneous ideal whose zero set is the node set, in the ambient ring.
struct NodeScheme {
  Ring ring;
  std::vector<MultiPoly> ideal;
  /// For c4_deg5: whether every Jacobian generator lies in the Pfaffian ideal.
  std::optional<bool> j_subset_i;
};

NodeScheme node_scheme(NodeConstruction c, std::uint32_t prime, std::uint64_t seed,
                       std::uint64_t budget = kDefaultBudget);

/// Affine chart {h = 1} with h = a_0 x_0 + ... + a_{n-2} x_{n-2} + x_{n-1},
/// the a_i drawn from the seed.
struct Chart {
  Ring affine;
  std::vector<std::uint32_t> coefficients;  // a_0..a_{n-2}

  /// Ideal restricted to {h = 1}, in n-1 variables.
  std::vector<MultiPoly> restrict_affine(std::span<const MultiPoly> gens) const;
  /// Ideal restricted to {h = 0}, homogeneous in n-1 variables.
  std::vector<MultiPoly> restrict_infinity(std::span<const MultiPoly> gens) const;
  /// Homogenizes affine polynomials back into the ambient ring.
  std::vector<MultiPoly> homogenize_back(std::span<const MultiPoly> affine_polys,
                                         const Ring& ambient) const;
};

Chart random_chart(const Ring& ambient, std::uint64_t seed);

/// Generators of I : h^infinity in the ambient ring.
std::vector<MultiPoly> saturate_at_chart(std::span<const MultiPoly> gens, const Chart& chart,
                                         const Ring& ambient, std::uint64_t budget = kDefaultBudget);

struct NodeReport {
  NodeConstruction construction;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  bool zero_dimensional = false;
  std::optional<std::uint64_t> degree;
  bool separable = false;
  bool infinity_empty = false;
  int expected = 0;
  bool match = false;
  std::optional<bool> j_subset_i;
  /// "ok", "mismatch" or "seed-failure".
  std::string status;
  std::string detail;
  double runtime_ms = 0;

  nlohmann::json to_json(bool with_timing) const;
};

NodeReport verify_nodes(NodeConstruction c, std::uint32_t prime, std::uint64_t seed,
                        std::uint64_t budget = kDefaultBudget);

struct DefectReport {
  std::string name;
  std::int64_t degree = 0;         // degree d of the graded piece
  Integer ambient_dim;             // h^0(O(d))
  std::uint64_t ideal_dim = 0;     // dim I_d from graded_piece_dim
  std::optional<Integer> series_hf;  // HF(d) of the node scheme from its Hilbert series
  int mu = 0;
  Integer delta;

  nlohmann::json to_json() const;
};

/// Quintic of type c3_deg4: nodes cut out by f1 = f2 = g1 = g2 = 0, d = 5.
DefectReport quintic_defect(std::uint32_t prime, std::uint64_t seed);

/// Pfaffian nodes of type c4_deg5, saturated at a chart, d = 3.
DefectReport pfaffian_cubic_defect(std::uint32_t prime, std::uint64_t seed,
                                   std::uint64_t budget = kDefaultBudget);

}  // namespace cyc::groebner
