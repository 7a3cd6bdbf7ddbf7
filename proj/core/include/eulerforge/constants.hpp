#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eulerforge/bigfloat.hpp"
#include "eulerforge/rational.hpp"

namespace eulerforge {

/// One of the basis constants gamma, ln 2, zeta(m >= 2). sigma_k / tau_k are
/// never stored -- they are normalized into this basis on construction.
class ConstSymbol {
 public:
  static ConstSymbol euler_gamma() { return ConstSymbol(0); }
  static ConstSymbol ln2() { return ConstSymbol(1); }
  static ConstSymbol zeta(int m);

  bool is_gamma() const { return code_ == 0; }
  bool is_ln2() const { return code_ == 1; }
  bool is_zeta() const { return code_ >= 2; }
  int zeta_index() const { return code_; }

  /// Serialized name: "gamma", "ln2", "zeta2", "zeta3", ...
  std::string name() const;
  static ConstSymbol parse(const std::string& name);

  friend bool operator==(const ConstSymbol&, const ConstSymbol&) = default;
  friend std::strong_ordering operator<=>(const ConstSymbol&, const ConstSymbol&) = default;

 private:
  explicit ConstSymbol(int code) : code_(code) {}
  int code_;  // 0 = gamma, 1 = ln2, m >= 2 = zeta(m)
};

/// Product of constant-symbol powers, e.g. zeta(3)*ln2^2.
class ConstMonomial {
 public:
  ConstMonomial() = default;
  static ConstMonomial symbol(ConstSymbol s, int power = 1);

  const std::vector<std::pair<ConstSymbol, int>>& factors() const { return f_; }
  bool is_unit() const { return f_.empty(); }
  bool contains(ConstSymbol s) const;
  int weight() const;  // sum of power * symbol weight (gamma,ln2 weigh 1; zeta(m) weighs m)

  ConstMonomial operator*(const ConstMonomial& o) const;

  friend bool operator==(const ConstMonomial&, const ConstMonomial&) = default;
  friend std::strong_ordering operator<=>(const ConstMonomial&, const ConstMonomial&) = default;

 private:
  std::vector<std::pair<ConstSymbol, int>> f_;  // sorted by symbol, powers > 0
};

/// Polynomial with rational coefficients in {gamma, ln2, zeta(m)}.
class ZetaPoly {
 public:
  ZetaPoly() = default;
  explicit ZetaPoly(const Rational& constant);
  static ZetaPoly symbol(ConstSymbol s);
  static ZetaPoly term(const Rational& coefficient, const ConstMonomial& m);

  bool is_zero() const { return terms_.empty(); }
  const std::map<ConstMonomial, Rational>& terms() const { return terms_; }
  Rational coeff(const ConstMonomial& m) const;

  /// True when some term contains the Euler constant.
  bool depends_on_gamma() const;

  ZetaPoly& operator+=(const ZetaPoly& o);
  ZetaPoly& operator-=(const ZetaPoly& o);
  ZetaPoly& operator*=(const Rational& q);
  friend ZetaPoly operator+(ZetaPoly x, const ZetaPoly& y) { return x += y; }
  friend ZetaPoly operator-(ZetaPoly x, const ZetaPoly& y) { return x -= y; }
  friend ZetaPoly operator*(ZetaPoly x, const Rational& q) { return x *= q; }
  friend ZetaPoly operator-(ZetaPoly x) { return x *= Rational(-1); }
  friend ZetaPoly operator*(const ZetaPoly& x, const ZetaPoly& y);
  friend bool operator==(const ZetaPoly&, const ZetaPoly&) = default;

 private:
  void add_term(const ConstMonomial& m, const Rational& q);
  std::map<ConstMonomial, Rational> terms_;
};

enum class SigmaTau { sigma, tau };

/// sigma_1 -> gamma, sigma_m -> zeta(m); tau_1 -> gamma + 2 ln2,
/// tau_m -> (2^m - 1) zeta(m).
ZetaPoly sigma_tau_normalize(SigmaTau kind, int index);

/// Numeric value of a basis constant, correct to ~2^-(precision_bits) after
/// internal guard digits. pi (for rendering-side checks) is exposed too.
/// Values are cached per (symbol, precision); the cache tolerates concurrent
/// readers.
BigFloat eval_constant(ConstSymbol s, mpfr_prec_t precision_bits);

/// Numeric pi at the given precision (Machin-type arctangent series).
BigFloat pi_value(mpfr_prec_t precision_bits);

/// Euler's constant -- only the tail asymptotics need it, at modest precision.
BigFloat euler_gamma_value(mpfr_prec_t precision_bits);

BigFloat zetapoly_eval(const ZetaPoly& p, mpfr_prec_t precision_bits);

/// Human-readable rendering. With pi_form, zeta(2) -> pi^2/6 and
/// zeta(4) -> pi^4/90 are substituted and powers of pi collected;
/// odd zeta values stay symbolic.
std::string render(const ZetaPoly& p, bool pi_form);
std::string render_latex(const ZetaPoly& p, bool pi_form);

}  // namespace eulerforge
