#include "eulerforge/constants.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace eulerforge {

// ---------------------------------------------------------------------------
// symbols and polynomials

ConstSymbol ConstSymbol::zeta(int m) {
  if (m < 2) throw std::invalid_argument("ConstSymbol::zeta: index must be >= 2");
  return ConstSymbol(m);
}

std::string ConstSymbol::name() const {
  if (is_gamma()) return "gamma";
  if (is_ln2()) return "ln2";
  return "zeta" + std::to_string(code_);
}

ConstSymbol ConstSymbol::parse(const std::string& name) {
  if (name == "gamma") return euler_gamma();
  if (name == "ln2") return ln2();
  if (name.rfind("zeta", 0) == 0) {
    int m = std::stoi(name.substr(4));
    return zeta(m);
  }
  throw std::invalid_argument("ConstSymbol::parse: unknown symbol '" + name + "'");
}

ConstMonomial ConstMonomial::symbol(ConstSymbol s, int power) {
  if (power <= 0) throw std::invalid_argument("ConstMonomial: power must be positive");
  ConstMonomial m;
  m.f_.emplace_back(s, power);
  return m;
}

bool ConstMonomial::contains(ConstSymbol s) const {
  return std::any_of(f_.begin(), f_.end(), [&](const auto& p) { return p.first == s; });
}

int ConstMonomial::weight() const {
  int w = 0;
  for (const auto& [s, e] : f_) w += e * (s.is_zeta() ? s.zeta_index() : 1);
  return w;
}

ConstMonomial ConstMonomial::operator*(const ConstMonomial& o) const {
  ConstMonomial r;
  auto i = f_.begin();
  auto j = o.f_.begin();
  while (i != f_.end() || j != o.f_.end()) {
    if (j == o.f_.end() || (i != f_.end() && i->first < j->first)) {
      r.f_.push_back(*i++);
    } else if (i == f_.end() || j->first < i->first) {
      r.f_.push_back(*j++);
    } else {
      r.f_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

ZetaPoly::ZetaPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(ConstMonomial(), constant);
}

ZetaPoly ZetaPoly::symbol(ConstSymbol s) {
  return term(Rational(1), ConstMonomial::symbol(s));
}

ZetaPoly ZetaPoly::term(const Rational& coefficient, const ConstMonomial& m) {
  ZetaPoly p;
  if (!coefficient.is_zero()) p.terms_.emplace(m, coefficient);
  return p;
}

Rational ZetaPoly::coeff(const ConstMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

bool ZetaPoly::depends_on_gamma() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return t.first.contains(ConstSymbol::euler_gamma());
  });
}

void ZetaPoly::add_term(const ConstMonomial& m, const Rational& q) {
  if (q.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ZetaPoly& ZetaPoly::operator+=(const ZetaPoly& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, q);
  return *this;
}

ZetaPoly& ZetaPoly::operator-=(const ZetaPoly& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, -q);
  return *this;
}

ZetaPoly& ZetaPoly::operator*=(const Rational& q) {
  if (q.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= q;
  return *this;
}

ZetaPoly operator*(const ZetaPoly& x, const ZetaPoly& y) {
  ZetaPoly r;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) r.add_term(mx * my, cx * cy);
  return r;
}

ZetaPoly sigma_tau_normalize(SigmaTau kind, int index) {
  if (index < 1) throw std::invalid_argument("sigma_tau_normalize: index must be >= 1");
  if (kind == SigmaTau::sigma) {
    if (index == 1) return ZetaPoly::symbol(ConstSymbol::euler_gamma());
    return ZetaPoly::symbol(ConstSymbol::zeta(index));
  }
  if (index == 1) {
    ZetaPoly p = ZetaPoly::symbol(ConstSymbol::euler_gamma());
    p += ZetaPoly::symbol(ConstSymbol::ln2()) * Rational(2);
    return p;
  }
  // tau_m = (2^m - 1) zeta(m)
  Integer two_m;
  mpz_ui_pow_ui(two_m.get_mpz_t(), 2, static_cast<unsigned long>(index));
  return ZetaPoly::symbol(ConstSymbol::zeta(index)) * Rational(Integer(two_m - 1));
}

// ---------------------------------------------------------------------------
// numerics

namespace {

constexpr mpfr_prec_t kGuardBits = 16;

// atan(1/x) by the Taylor series, exact integer powers of x.
BigFloat atan_recip(unsigned long x, mpfr_prec_t wp) {
  BigFloat sum(wp);
  BigFloat power = BigFloat::of(1L, wp);
  power.div_ui(x);
  const unsigned long x2 = x * x;
  const BigFloat eps = BigFloat::two_to(-static_cast<long>(wp) - 4, 64);
  for (long j = 0;; ++j) {
    BigFloat term = power;
    term.div_ui(static_cast<unsigned long>(2 * j + 1));
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
    if (term < eps) break;
    power.div_ui(x2);
  }
  return sum;
}

BigFloat compute_pi(mpfr_prec_t wp) {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
  BigFloat p = atan_recip(5, wp);
  p.mul_ui(16);
  BigFloat q = atan_recip(239, wp);
  q.mul_ui(4);
  return p - q;
}

BigFloat compute_ln2(mpfr_prec_t wp) {
  // ln 2 = 2 artanh(1/3) = 2 sum_{j>=0} 3^-(2j+1) / (2j+1)
  BigFloat sum(wp);
  BigFloat power = BigFloat::of(1L, wp);
  power.div_ui(3);
  const BigFloat eps = BigFloat::two_to(-static_cast<long>(wp) - 4, 64);
  for (long j = 0;; ++j) {
    BigFloat term = power;
    term.div_ui(static_cast<unsigned long>(2 * j + 1));
    sum += term;
    if (term < eps) break;
    power.div_ui(9);
  }
  sum.mul_ui(2);
  return sum;
}

// Euler-Maclaurin: zeta(m) = sum_{k<K} k^-m + K^(1-m)/(m-1) + K^-m/2
//   + sum_j B_{2j}/(2j)! * (m)(m+1)...(m+2j-2) * K^-(m+2j-1).
// Both the cutoff and the correction order are derived from the target
// precision: corrections are added until the first dropped term falls below
// it, and the cutoff doubles if the asymptotic terms stop shrinking first.
BigFloat compute_zeta(int m, mpfr_prec_t wp) {
  unsigned long cutoff = std::max<unsigned long>(32, static_cast<unsigned long>(wp) / 2);
  const Rational eps(Integer(1), [&] {
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), 2, static_cast<unsigned long>(wp) + 4);
    return e;
  }());

  for (;; cutoff *= 2) {
    BigFloat direct(wp);
    Integer kpow;
    for (unsigned long k = 1; k < cutoff; ++k) {
      mpz_ui_pow_ui(kpow.get_mpz_t(), k, static_cast<unsigned long>(m));
      BigFloat t = BigFloat::of(1L, wp);
      t.div_integer(kpow);
      direct += t;
    }

    Integer km1;  // cutoff^(m-1)
    mpz_ui_pow_ui(km1.get_mpz_t(), cutoff, static_cast<unsigned long>(m - 1));
    Rational tail = Rational(Integer(1), km1) / Rational(m - 1);
    tail += Rational(Integer(1), Integer(km1 * cutoff)) / Rational(2);

    bool converged = false;
    Rational prev_abs;
    Integer rising(1);  // (m)(m+1)...(m+2j-2)
    for (unsigned j = 1; j <= static_cast<unsigned>(wp); ++j) {
      if (j == 1)
        rising *= m;  // (m), one factor
      else
        rising *= Integer(m + 2 * j - 3) * Integer(m + 2 * j - 2);  // extends to (m+2j-2)
      Integer kp;  // cutoff^(m+2j-1)
      mpz_ui_pow_ui(kp.get_mpz_t(), cutoff, static_cast<unsigned long>(m) + 2 * j - 1);
      Rational term = bernoulli(2 * j) / Rational(factorial(2 * j)) * Rational(rising) /
                      Rational(Integer(kp));
      Rational term_abs = term.abs();
      if (j > 1 && term_abs >= prev_abs) break;  // asymptotic floor: enlarge cutoff
      tail += term;
      prev_abs = term_abs;
      if (term_abs < eps) {
        converged = true;
        break;
      }
    }
    if (converged) {
      direct += BigFloat::of(tail, wp);
      return direct;
    }
  }
}

struct ConstCache {
  std::shared_mutex mutex;
  std::map<std::pair<int, mpfr_prec_t>, BigFloat> values;
};

ConstCache& cache() {
  static ConstCache c;
  return c;
}

// codes: 0 gamma, 1 ln2, m zeta(m), -1 pi
BigFloat cached_value(int code, mpfr_prec_t precision_bits) {
  auto key = std::make_pair(code, precision_bits);
  {
    std::shared_lock lock(cache().mutex);
    auto it = cache().values.find(key);
    if (it != cache().values.end()) return it->second;
  }
  const mpfr_prec_t wp = precision_bits + kGuardBits;
  BigFloat v(wp);
  switch (code) {
    case -1: v = compute_pi(wp); break;
    case 0: mpfr_const_euler(v.get(), MPFR_RNDN); break;
    case 1: v = compute_ln2(wp); break;
    default: v = compute_zeta(code, wp); break;
  }
  BigFloat out = v.rounded_to(precision_bits);
  std::unique_lock lock(cache().mutex);
  cache().values.emplace(key, out);
  return out;
}

}  // namespace

BigFloat eval_constant(ConstSymbol s, mpfr_prec_t precision_bits) {
  if (precision_bits < 64)
    throw std::invalid_argument("eval_constant: precision must be >= 64 bits");
  int code = s.is_gamma() ? 0 : s.is_ln2() ? 1 : s.zeta_index();
  return cached_value(code, precision_bits);
}

BigFloat pi_value(mpfr_prec_t precision_bits) {
  if (precision_bits < 64)
    throw std::invalid_argument("pi_value: precision must be >= 64 bits");
  return cached_value(-1, precision_bits);
}

BigFloat euler_gamma_value(mpfr_prec_t precision_bits) {
  if (precision_bits < 64)
    throw std::invalid_argument("euler_gamma_value: precision must be >= 64 bits");
  return cached_value(0, precision_bits);
}

BigFloat zetapoly_eval(const ZetaPoly& p, mpfr_prec_t precision_bits) {
  const mpfr_prec_t wp = precision_bits + kGuardBits;
  BigFloat acc(wp);
  for (const auto& [mono, coeff] : p.terms()) {
    BigFloat term = BigFloat::of(coeff, wp);
    for (const auto& [sym, e] : mono.factors()) {
      BigFloat v = eval_constant(sym, wp);
      term *= (e == 1) ? v : v.pow_si(e);
    }
    acc += term;
  }
  return acc.rounded_to(precision_bits);
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string superscript(int n) {
  static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴",
                                   "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char ch : std::to_string(n)) out += digits[ch - '0'];
  return out;
}

// One rendered term: symbol text (possibly empty) plus a rational coefficient.
struct DisplayTerm {
  int weight = 0;
  int heaviest = 0;  // weight of the heaviest single constant, for display order
  std::string plain;
  std::string latex;
  Rational coefficient;
};

std::string plain_symbol(ConstSymbol s, int e) {
  if (s.is_gamma()) return e == 1 ? "γ" : "γ" + superscript(e);
  if (s.is_ln2()) return e == 1 ? "ln2" : "ln" + superscript(e) + "2";
  std::string base = "ζ(" + std::to_string(s.zeta_index()) + ")";
  return e == 1 ? base : base + superscript(e);
}

std::string latex_symbol(ConstSymbol s, int e) {
  std::string base;
  if (s.is_gamma()) base = "\\gamma";
  else if (s.is_ln2()) return e == 1 ? "\\ln 2" : "\\ln^" + std::to_string(e) + " 2";
  else base = "\\zeta(" + std::to_string(s.zeta_index()) + ")";
  return e == 1 ? base : base + "^" + std::to_string(e);
}

// Collects terms, substituting zeta(2) and zeta(4) by pi powers when asked;
// terms that collide after substitution are merged.
std::vector<DisplayTerm> display_terms(const ZetaPoly& p, bool pi_form) {
  std::map<std::pair<int, std::vector<std::pair<int, int>>>, DisplayTerm> merged;
  for (const auto& [mono, coeff] : p.terms()) {
    int pi_power = 0;
    int heaviest = 0;
    Rational c = coeff;
    std::vector<std::pair<int, int>> rest;  // (symbol code key, power), for merge key
    std::string plain, latex;
    for (const auto& [sym, e] : mono.factors()) {
      heaviest = std::max(heaviest, sym.is_zeta() ? sym.zeta_index() : 1);
      if (pi_form && sym.is_zeta() && sym.zeta_index() == 2) {
        pi_power += 2 * e;
        c /= Rational(6).pow(static_cast<unsigned>(e));
        continue;
      }
      if (pi_form && sym.is_zeta() && sym.zeta_index() == 4) {
        pi_power += 4 * e;
        c /= Rational(90).pow(static_cast<unsigned>(e));
        continue;
      }
      int key = sym.is_gamma() ? -2 : sym.is_ln2() ? -1 : sym.zeta_index();
      rest.emplace_back(key, e);
      plain += plain_symbol(sym, e);
      if (!latex.empty()) latex += "\\,";
      latex += latex_symbol(sym, e);
    }
    if (pi_power > 0) {
      heaviest = std::max(heaviest, pi_power);
      std::string pp = pi_power == 1 ? "π" : "π" + superscript(pi_power);
      std::string pl = pi_power == 1 ? "\\pi" : "\\pi^" + std::to_string(pi_power);
      plain = pp + plain;
      latex = latex.empty() ? pl : pl + "\\," + latex;
    }
    auto key = std::make_pair(pi_power, rest);
    auto it = merged.find(key);
    if (it == merged.end()) {
      DisplayTerm t;
      t.weight = mono.weight();
      t.heaviest = heaviest;
      t.plain = plain;
      t.latex = latex;
      t.coefficient = c;
      merged.emplace(key, std::move(t));
    } else {
      it->second.coefficient += c;
    }
  }
  std::vector<DisplayTerm> out;
  std::vector<int> pi_powers;
  for (auto& [k, t] : merged)
    if (!t.coefficient.is_zero()) {
      pi_powers.push_back(k.first);
      out.push_back(std::move(t));
    }
  std::vector<size_t> order(out.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    if (out[x].weight != out[y].weight) return out[x].weight > out[y].weight;
    if (out[x].heaviest != out[y].heaviest) return out[x].heaviest > out[y].heaviest;
    return pi_powers[x] > pi_powers[y];
  });
  std::vector<DisplayTerm> sorted;
  sorted.reserve(out.size());
  for (size_t i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

}  // namespace

std::string render(const ZetaPoly& p, bool pi_form) {
  auto terms = display_terms(p, pi_form);
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    Rational mag = t.coefficient.abs();
    if (out.empty()) {
      if (t.coefficient.sign() < 0) out += "-";
    } else {
      out += t.coefficient.sign() < 0 ? " - " : " + ";
    }
    std::string num = mag.num().get_str();
    std::string body;
    if (t.plain.empty()) {
      body = num;
    } else {
      body = (num == "1" ? "" : num) + t.plain;
    }
    if (mag.den() != 1) body += "/" + mag.den().get_str();
    out += body;
  }
  return out;
}

std::string render_latex(const ZetaPoly& p, bool pi_form) {
  auto terms = display_terms(p, pi_form);
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    Rational mag = t.coefficient.abs();
    if (out.empty()) {
      if (t.coefficient.sign() < 0) out += "-";
    } else {
      out += t.coefficient.sign() < 0 ? " - " : " + ";
    }
    std::string num = mag.num().get_str();
    std::string numerator = t.latex.empty() ? num : (num == "1" ? t.latex : num + t.latex);
    if (mag.den() != 1) {
      out += "\\frac{" + numerator + "}{" + mag.den().get_str() + "}";
    } else {
      out += numerator;
    }
  }
  return out;
}

}  // namespace eulerforge
