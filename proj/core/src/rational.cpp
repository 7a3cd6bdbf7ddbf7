#include "eulerforge/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace eulerforge {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(s));
    }
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.v_ = -r.v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

Rational Rational::abs() const {
  mpq_class r;
  mpq_abs(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

Rational Rational::pow(unsigned e) const {
  Rational r(1);
  Rational base = *this;
  while (e != 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  Integer g, l;
  mpz_gcd(g.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  return Rational(g, l);
}

Integer central_binomial_integer(unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), 2ul * k, k);
  return r;
}

Rational central_binomial(unsigned k) { return Rational(central_binomial_integer(k)); }

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

// B_0..B_n via the defining recurrence sum_{j<=n} C(n+1, j) B_j = 0 for n >= 1,
// which yields B_1 = -1/2 directly.
std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli_cache;

}  // namespace

Rational bernoulli(unsigned n) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  auto& cache = g_bernoulli_cache;
  if (cache.empty()) cache.push_back(Rational(1));
  while (cache.size() <= n) {
    unsigned m = static_cast<unsigned>(cache.size());
    Rational acc;
    for (unsigned j = 0; j < m; ++j) {
      acc += Rational(binomial(m + 1, j)) * cache[j];
    }
    cache.push_back(-acc / Rational(static_cast<long>(m) + 1));
  }
  return cache[n];
}

}  // namespace eulerforge
