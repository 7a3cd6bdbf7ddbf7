#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "eulerforge/rational.hpp"

namespace eulerforge {

/// Value-semantics wrapper over an mpfr_t. Each value carries its own
/// precision; binary operators round to the wider of the two operands.
/// Rounding mode is round-to-nearest throughout.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision = 128) {
    mpfr_init2(v_, precision);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat of(long value, mpfr_prec_t precision) {
    BigFloat r(precision);
    mpfr_set_si(r.v_, value, MPFR_RNDN);
    return r;
  }
  static BigFloat of(const Rational& q, mpfr_prec_t precision) {
    BigFloat r(precision);
    mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static BigFloat of(double value, mpfr_prec_t precision) {
    BigFloat r(precision);
    mpfr_set_d(r.v_, value, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  /// Returns a copy rounded to the given precision.
  BigFloat rounded_to(mpfr_prec_t precision) const {
    BigFloat r(precision);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  BigFloat& operator*=(const Rational& q) { mpfr_mul_q(v_, v_, q.raw().get_mpq_t(), MPFR_RNDN); return *this; }
  BigFloat& operator/=(const Rational& q) { mpfr_div_q(v_, v_, q.raw().get_mpq_t(), MPFR_RNDN); return *this; }
  BigFloat& operator+=(const Rational& q) { mpfr_add_q(v_, v_, q.raw().get_mpq_t(), MPFR_RNDN); return *this; }

  BigFloat& mul_ui(unsigned long u) { mpfr_mul_ui(v_, v_, u, MPFR_RNDN); return *this; }
  BigFloat& div_ui(unsigned long u) { mpfr_div_ui(v_, v_, u, MPFR_RNDN); return *this; }
  BigFloat& div_integer(const Integer& z) { mpfr_div_z(v_, v_, z.get_mpz_t(), MPFR_RNDN); return *this; }
  BigFloat& negate() { mpfr_neg(v_, v_, MPFR_RNDN); return *this; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_add); }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_sub); }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_mul); }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_div); }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  BigFloat abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat sqrt() const {
    BigFloat r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat log() const {
    BigFloat r(precision());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat pow_si(long e) const {
    BigFloat r(precision());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
  }

  /// 2^e at the given precision (exact).
  static BigFloat two_to(long e, mpfr_prec_t precision) {
    BigFloat r(precision);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Scientific-notation decimal string with the given number of significant
  /// digits (default 30).
  std::string str(int significant_digits = 30) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  using TernaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static BigFloat binop(const BigFloat& a, const BigFloat& b, TernaryFn fn) {
    BigFloat r(std::max(a.precision(), b.precision()));
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

}  // namespace eulerforge
