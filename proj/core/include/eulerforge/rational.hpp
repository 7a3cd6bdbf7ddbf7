#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace eulerforge {

using Integer = mpz_class;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator, so equality is structural; zero is 0/1. All arithmetic is
/// exact -- nothing in this class ever rounds.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long num, long den);
  explicit Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den);

  /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Rational inverse() const;
  Rational abs() const;
  Rational pow(unsigned e) const;

  /// Serialized form: "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  double to_double() const { return v_.get_d(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// gcd of absolute values, gcd(x, 0) = |x|. For rationals this is
/// gcd(nums)/lcm(dens) -- the "content" building block.
Rational rational_gcd(const Rational& a, const Rational& b);

/// C(2k, k), exact.
Integer central_binomial_integer(unsigned k);
Rational central_binomial(unsigned k);

/// Bernoulli number B_n under the B_1 = -1/2 convention. Values are cached;
/// the cache is internally synchronized.
Rational bernoulli(unsigned n);

/// n! as an exact integer.
Integer factorial(unsigned n);

/// C(n, k), exact.
Integer binomial(unsigned n, unsigned k);

}  // namespace eulerforge
