#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cyc/algebra/coefficient.hpp"
#include "cyc/error.hpp"
#include "cyc/series/series.hpp"

namespace cyc::chern {

/// Fano threefold with c1 = index * H.
struct FanoModel {
  std::string name;
  int index = 0;
  Integer H3;
  Integer Hc2;
  Integer chi_top;

  /// Throws std::invalid_argument unless index * Hc2 == 24 and H3 > 0.
  void validate() const;

  static FanoModel projective_space();  // P^3
  static FanoModel quadric();           // Q3 in P^4
  /// The index-two family with H^3 = r, 1 <= r <= 5.
  static FanoModel index_two(int r);
};

class MissingChernNumber : public Error {
 public:
  MissingChernNumber(const std::string& what, std::vector<int> key)
      : Error(what), key_(std::move(key)) {}
  const std::vector<int>& key() const { return key_; }

 private:
  std::vector<int> key_;
};

/// Mixed Chern numbers of a smooth projective ambient. A key holds the
/// exponents of c_1..c_dim of the tangent bundle followed by the exponent of
/// the hyperplane class, and has weighted degree dim (c_i weighs i).
class AmbientChernData {
 public:
  using Key = std::vector<int>;

  AmbientChernData(int dimension, std::map<Key, Integer> numbers);

  int dimension() const { return dimension_; }
  const std::map<Key, Integer>& numbers() const { return numbers_; }
  /// Throws MissingChernNumber naming the key.
  const Integer& at(const Key& key) const;

  /// P^n, where c(T) = (1+H)^{n+1}.
  static AmbientChernData projective_space(int n);
  /// The Grassmannian G(2,5) in its Pluecker embedding (shipped data).
  static AmbientChernData grassmannian_g25();

  /// Text format: a `dimension n` line, then `a_1 .. a_n k : value` lines;
  /// `#` starts a comment.
  static AmbientChernData parse(std::string_view text);
  std::string to_string() const;

 private:
  int dimension_;
  std::map<Key, Integer> numbers_;
};

/// Euler number of a Calabi-Yau complete intersection threefold in a weighted
/// projective space. Throws std::invalid_argument if it is not a threefold
/// with sum(degrees) == sum(weights), DomainError on a non-integral result.
Integer ci_euler_weighted(const series::HilbertData& h);

/// Same computation for any complete intersection threefold, no Calabi-Yau
/// requirement.
Integer ci_threefold_euler(const series::HilbertData& h);

/// c_2 . H on a complete intersection threefold.
Integer ci_c2_dot_h(const series::HilbertData& h);

/// Euler number of a complete intersection threefold in a general ambient.
Integer ci_euler_ambient(const AmbientChernData& a, const std::vector<int>& degrees);

/// Euler number of a smooth member of |mH| on F.
Integer surface_euler_fano(const FanoModel& f, int m);

/// Euler number of the curve |aH| . |bH| on F.
Integer curve_euler_ci_fano(const FanoModel& f, int a, int b);

/// 12 - r; r = 8 means P1 x P1.
Integer delpezzo_euler(int r);

}  // namespace cyc::chern
