#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "eulerforge/rational.hpp"

namespace eulerforge {

/// The fixed four-letter parameter alphabet of the summation theorems.
enum class ParamVar : int { a = 0, b = 1, c = 2, d = 3 };

constexpr int kNumParams = 4;

char param_name(ParamVar v);

/// Power product a^i b^j c^k d^l. Ordered graded-lexicographically
/// (degree first, then a-before-b-before-c-before-d).
class Monomial {
 public:
  Monomial() : e_{0, 0, 0, 0} {}

  static Monomial var(ParamVar v, int exponent = 1) {
    Monomial m;
    m.e_[static_cast<int>(v)] = static_cast<std::uint8_t>(exponent);
    return m;
  }

  int exponent(ParamVar v) const { return e_[static_cast<int>(v)]; }
  int degree() const { return e_[0] + e_[1] + e_[2] + e_[3]; }
  bool is_unit() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumParams; ++i)
      r.e_[i] = static_cast<std::uint8_t>(e_[i] + o.e_[i]);
    return r;
  }

  bool divisible_by(const Monomial& o) const {
    for (int i = 0; i < kNumParams; ++i)
      if (e_[i] < o.e_[i]) return false;
    return true;
  }

  /// Exact division; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumParams; ++i)
      r.e_[i] = static_cast<std::uint8_t>(e_[i] - o.e_[i]);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
    if (int dx = x.degree(), dy = y.degree(); dx != dy)
      return dx <=> dy;
    for (int i = 0; i < kNumParams; ++i)
      if (x.e_[i] != y.e_[i]) return y.e_[i] <=> x.e_[i];
    return std::strong_ordering::equal;
  }

  /// Catalog key form: "a1b1", "a2b1c1", "" for the unit monomial.
  std::string str() const;
  static Monomial parse(std::string_view text);

 private:
  std::array<std::uint8_t, 4> e_;
};

/// Linear form in the parameters with rational coefficients and zero
/// constant term, e.g. c - a - b or (b + d)/3.
class LinearForm {
 public:
  LinearForm() = default;
  static LinearForm var(ParamVar v) {
    LinearForm f;
    f.c_[static_cast<int>(v)] = Rational(1);
    return f;
  }

  const Rational& coeff(ParamVar v) const { return c_[static_cast<int>(v)]; }
  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }

  LinearForm& operator+=(const LinearForm& o) {
    for (int i = 0; i < kNumParams; ++i) c_[i] += o.c_[i];
    return *this;
  }
  LinearForm& operator-=(const LinearForm& o) {
    for (int i = 0; i < kNumParams; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  LinearForm& operator*=(const Rational& q) {
    for (auto& c : c_) c *= q;
    return *this;
  }
  friend LinearForm operator+(LinearForm x, const LinearForm& y) { return x += y; }
  friend LinearForm operator-(LinearForm x, const LinearForm& y) { return x -= y; }
  friend LinearForm operator*(LinearForm x, const Rational& q) { return x *= q; }
  friend LinearForm operator-(LinearForm x) { return x *= Rational(-1); }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

  Rational eval(const std::array<Rational, 4>& values) const {
    Rational r;
    for (int i = 0; i < kNumParams; ++i)
      if (!c_[i].is_zero()) r += c_[i] * values[i];
    return r;
  }

  std::string str() const;

 private:
  std::array<Rational, 4> c_;
};

/// Multivariate power series in {a,b,c,d} truncated at a fixed total degree,
/// with coefficients in an arbitrary commutative ring C. C must provide a
/// default constructor yielding the ring zero, is_zero(), operator+=,
/// ring multiplication via operator*, rational scaling via operator*=
/// (Rational), and operator==. Stored sparsely; zero coefficients are never
/// kept. Operations on series with different truncation degrees throw.
template <class C>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int truncation_degree) : trunc_(truncation_degree) {
    if (truncation_degree < 1)
      throw std::invalid_argument("TruncatedSeries: truncation degree must be positive");
  }

  static TruncatedSeries one(int truncation_degree) {
    return constant(ring_one(), truncation_degree);
  }
  static TruncatedSeries constant(const C& value, int truncation_degree) {
    TruncatedSeries s(truncation_degree);
    s.add_term(Monomial(), value);
    return s;
  }

  int truncation_degree() const { return trunc_; }
  const std::map<Monomial, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Stored coefficient or the ring zero. Throws if the monomial exceeds the
  /// truncation degree -- such a coefficient was never computed.
  const C& coeff(const Monomial& m) const {
    if (m.degree() > trunc_)
      throw std::out_of_range("TruncatedSeries::coeff: monomial degree exceeds truncation");
    auto it = terms_.find(m);
    return it == terms_.end() ? ring_zero() : it->second;
  }

  void add_term(const Monomial& m, const C& value) {
    if (m.degree() > trunc_)
      throw std::out_of_range("TruncatedSeries::add_term: monomial degree exceeds truncation");
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_compatible(o);
    for (const auto& [m, v] : o.terms_) add_term(m, v);
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries x, const TruncatedSeries& y) { return x += y; }

  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_compatible(o);
    for (const auto& [m, v] : o.terms_) {
      C neg = v;
      neg *= Rational(-1);
      add_term(m, neg);
    }
    return *this;
  }
  friend TruncatedSeries operator-(TruncatedSeries x, const TruncatedSeries& y) { return x -= y; }

  TruncatedSeries scaled(const Rational& q) const {
    TruncatedSeries r(trunc_);
    if (q.is_zero()) return r;
    for (const auto& [m, v] : terms_) {
      C sv = v;
      sv *= q;
      r.terms_.emplace(m, std::move(sv));
    }
    return r;
  }

  /// Product with every term of total degree > N discarded.
  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
    x.check_compatible(y);
    TruncatedSeries r(x.trunc_);
    for (const auto& [mx, vx] : x.terms_) {
      int dx = mx.degree();
      for (const auto& [my, vy] : y.terms_) {
        if (dx + my.degree() > x.trunc_) continue;
        r.add_term(mx * my, vx * vy);
      }
    }
    return r;
  }

  /// Multiplies by coefficient * monomial, truncating.
  TruncatedSeries shifted(const Monomial& m, const Rational& coefficient) const {
    TruncatedSeries r(trunc_);
    int dm = m.degree();
    for (const auto& [mx, vx] : terms_) {
      if (mx.degree() + dm > trunc_) continue;
      C sv = vx;
      sv *= coefficient;
      r.add_term(mx * m, sv);
    }
    return r;
  }

  /// sum_{m=0}^{N} s^m / m!, exact in the coefficient ring. Requires a zero
  /// constant term.
  TruncatedSeries exp() const {
    if (!coeff(Monomial()).is_zero())
      throw std::domain_error("TruncatedSeries::exp: nonzero constant term");
    TruncatedSeries result = one(trunc_);
    TruncatedSeries power = one(trunc_);
    Rational fact(1);
    for (int m = 1; m <= trunc_; ++m) {
      power = power * (*this);
      if (power.is_zero()) break;
      fact *= Rational(m);
      result += power.scaled(fact.inverse());
    }
    return result;
  }

  friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y) {
    return x.trunc_ == y.trunc_ && x.terms_ == y.terms_;
  }

 private:
  static const C& ring_zero() {
    static const C zero{};
    return zero;
  }
  static C ring_one() { return C(Rational(1)); }
  void check_compatible(const TruncatedSeries& o) const {
    if (trunc_ != o.trunc_)
      throw std::invalid_argument("TruncatedSeries: truncation degree mismatch");
  }

  int trunc_;
  std::map<Monomial, C> terms_;
};

/// A linear form as a degree-N series (all terms of degree 1).
TruncatedSeries<Rational> linear_series(const LinearForm& form, int truncation_degree);

}  // namespace eulerforge
