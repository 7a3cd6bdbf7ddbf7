#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eulerforge/rational.hpp"
#include "eulerforge/series.hpp"

namespace eulerforge {

constexpr int kMaxHarmonicOrder = 6;

/// A generalized harmonic symbol: H_k^(r) or O_k^(r), optionally index-shifted
/// to k-1, plus the special symbol 1/k. Symbols are ranked for display so that
/// H-family monomials lead, then O, then the shifted families, then 1/k --
/// this reproduces the orientation of the classical identity tables.
class HarmonicSymbol {
 public:
  enum class Family { h, o };

  static HarmonicSymbol h(int order, int index_shift = 0) {
    return make(Family::h, order, index_shift);
  }
  static HarmonicSymbol o(int order, int index_shift = 0) {
    return make(Family::o, order, index_shift);
  }
  static HarmonicSymbol kinv() { return HarmonicSymbol(kKinvId); }

  bool is_kinv() const { return id_ == kKinvId; }
  Family family() const { return (id_ / kMaxHarmonicOrder) % 2 == 0 ? Family::h : Family::o; }
  int order() const { return is_kinv() ? 1 : id_ % kMaxHarmonicOrder + 1; }
  bool shifted() const { return !is_kinv() && id_ >= 2 * kMaxHarmonicOrder; }

  /// Serialized names: "H", "H2".."H6", "O".."O6", "Hm1", "Hm1_2".., "Om1",
  /// "Om1_2".., "Kinv".
  std::string name() const;
  static HarmonicSymbol parse(const std::string& name);

  std::uint8_t id() const { return id_; }
  static HarmonicSymbol from_id(std::uint8_t id);

  friend bool operator==(const HarmonicSymbol&, const HarmonicSymbol&) = default;
  friend std::strong_ordering operator<=>(const HarmonicSymbol&, const HarmonicSymbol&) = default;

 private:
  static constexpr std::uint8_t kKinvId = 4 * kMaxHarmonicOrder;
  static HarmonicSymbol make(Family f, int order, int index_shift);
  explicit HarmonicSymbol(std::uint8_t id) : id_(id) {}
  // id layout: H 0..5, O 6..11, Hm1 12..17, Om1 18..23, Kinv 24.
  std::uint8_t id_;
};

/// Multiset of harmonic symbols. The map ordering puts the display-leading
/// monomial first: ids compare elementwise, and on a common prefix the longer
/// (higher-degree) monomial wins.
class HarmonicMonomial {
 public:
  HarmonicMonomial() = default;
  static HarmonicMonomial symbol(HarmonicSymbol s, int power = 1);

  bool is_unit() const { return ids_.empty(); }
  int total_power() const { return static_cast<int>(ids_.size()); }
  int power_of(HarmonicSymbol s) const;

  /// Grouped (symbol, power) view, in id order.
  std::vector<std::pair<HarmonicSymbol, int>> factors() const;

  HarmonicMonomial operator*(const HarmonicMonomial& o) const;

  friend bool operator==(const HarmonicMonomial&, const HarmonicMonomial&) = default;
  friend bool operator<(const HarmonicMonomial& x, const HarmonicMonomial& y) {
    size_t n = std::min(x.ids_.size(), y.ids_.size());
    for (size_t i = 0; i < n; ++i)
      if (x.ids_[i] != y.ids_[i]) return x.ids_[i] < y.ids_[i];
    return x.ids_.size() > y.ids_.size();
  }

 private:
  std::vector<std::uint8_t> ids_;  // sorted ascending
};

/// Polynomial with rational coefficients in harmonic symbols. This is the
/// free commutative algebra: no relations between H, O, shifted symbols and
/// 1/k are applied implicitly (hpoly_shift_rewrite applies H_{k-1} = H_k - 1/k
/// on demand).
class HarmonicPoly {
 public:
  HarmonicPoly() = default;
  explicit HarmonicPoly(const Rational& constant);
  static HarmonicPoly symbol(HarmonicSymbol s);
  static HarmonicPoly term(const Rational& coefficient, const HarmonicMonomial& m);

  bool is_zero() const { return terms_.empty(); }
  const std::map<HarmonicMonomial, Rational>& terms() const { return terms_; }
  Rational coeff(const HarmonicMonomial& m) const;

  HarmonicPoly& operator+=(const HarmonicPoly& o);
  HarmonicPoly& operator-=(const HarmonicPoly& o);
  HarmonicPoly& operator*=(const Rational& q);
  friend HarmonicPoly operator+(HarmonicPoly x, const HarmonicPoly& y) { return x += y; }
  friend HarmonicPoly operator-(HarmonicPoly x, const HarmonicPoly& y) { return x -= y; }
  friend HarmonicPoly operator*(HarmonicPoly x, const Rational& q) { return x *= q; }
  friend HarmonicPoly operator-(HarmonicPoly x) { return x *= Rational(-1); }
  friend HarmonicPoly operator*(const HarmonicPoly& x, const HarmonicPoly& y);
  friend bool operator==(const HarmonicPoly&, const HarmonicPoly&) = default;

  /// gcd of the coefficients (positive), 0 for the zero polynomial.
  Rational content() const;
  /// Sign of the display-leading coefficient (0 for zero polynomial).
  int leading_sign() const;
  /// Largest p such that (1/k)^p divides every monomial.
  int min_kinv_power() const;
  /// Divides every monomial by (1/k)^p; caller guarantees divisibility.
  HarmonicPoly divided_by_kinv(int p) const;

 private:
  void add_term(const HarmonicMonomial& m, const Rational& q);
  std::map<HarmonicMonomial, Rational> terms_;
};

/// Exact value at index k >= 1 (H_0 = O_0 = 0 for shifted symbols at k = 1).
Rational hpoly_eval(const HarmonicPoly& p, long k);

/// Rewrites every H_{k-1}^(r) as H_k^(r) - (1/k)^r and expands. O-family
/// shifted symbols are left untouched (no 1/k expression exists for them).
HarmonicPoly hpoly_shift_rewrite(const HarmonicPoly& p);

/// One finite product of a theorem's summand: prod (1 + argument/i)^exponent
/// over i = 1..k (or k-1), with denominators i (LINEAR) or 2i-1 (ODD).
enum class FactorShape { linear, odd };
enum class FactorRange { up_to_k, up_to_k_minus_1 };

struct ProductFactor {
  FactorShape shape = FactorShape::linear;
  int exponent = 1;  // +1 or -1
  FactorRange range = FactorRange::up_to_k;
  LinearForm argument;
};

/// Expands the finite product as a truncated series whose coefficients are
/// harmonic polynomials in the symbols at index k (or k-1, per the range).
/// Backed by the symmetric-function templates generated once through degree
/// six; degrees beyond the template table throw.
TruncatedSeries<HarmonicPoly> product_expansion(const ProductFactor& factor,
                                                int truncation_degree);

}  // namespace eulerforge
