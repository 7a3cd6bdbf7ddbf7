#include "eulerforge/harmonic.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace eulerforge {

// ---------------------------------------------------------------------------
// symbols

HarmonicSymbol HarmonicSymbol::make(Family f, int order, int index_shift) {
  if (order < 1 || order > kMaxHarmonicOrder)
    throw std::invalid_argument("HarmonicSymbol: order out of range 1..6");
  if (index_shift != 0 && index_shift != 1)
    throw std::invalid_argument("HarmonicSymbol: index shift must be 0 or 1");
  int base = (f == Family::h ? 0 : kMaxHarmonicOrder) + (index_shift ? 2 * kMaxHarmonicOrder : 0);
  return HarmonicSymbol(static_cast<std::uint8_t>(base + order - 1));
}

HarmonicSymbol HarmonicSymbol::from_id(std::uint8_t id) {
  if (id > kKinvId) throw std::invalid_argument("HarmonicSymbol: bad id");
  return HarmonicSymbol(id);
}

std::string HarmonicSymbol::name() const {
  if (is_kinv()) return "Kinv";
  std::string base = family() == Family::h ? "H" : "O";
  if (shifted()) {
    base += "m1";
    return order() == 1 ? base : base + "_" + std::to_string(order());
  }
  return order() == 1 ? base : base + std::to_string(order());
}

HarmonicSymbol HarmonicSymbol::parse(const std::string& name) {
  if (name == "Kinv") return kinv();
  if (name.empty()) throw std::invalid_argument("HarmonicSymbol::parse: empty name");
  Family fam;
  if (name[0] == 'H') fam = Family::h;
  else if (name[0] == 'O') fam = Family::o;
  else throw std::invalid_argument("HarmonicSymbol::parse: unknown symbol '" + name + "'");
  std::string rest = name.substr(1);
  int shift = 0;
  if (rest.rfind("m1", 0) == 0) {
    shift = 1;
    rest = rest.substr(2);
    if (!rest.empty() && rest[0] == '_') rest = rest.substr(1);
  }
  int order = rest.empty() ? 1 : std::stoi(rest);
  return make(fam, order, shift);
}

HarmonicMonomial HarmonicMonomial::symbol(HarmonicSymbol s, int power) {
  if (power <= 0) throw std::invalid_argument("HarmonicMonomial: power must be positive");
  HarmonicMonomial m;
  m.ids_.assign(static_cast<size_t>(power), s.id());
  return m;
}

int HarmonicMonomial::power_of(HarmonicSymbol s) const {
  return static_cast<int>(std::count(ids_.begin(), ids_.end(), s.id()));
}

std::vector<std::pair<HarmonicSymbol, int>> HarmonicMonomial::factors() const {
  std::vector<std::pair<HarmonicSymbol, int>> out;
  for (size_t i = 0; i < ids_.size();) {
    size_t j = i;
    while (j < ids_.size() && ids_[j] == ids_[i]) ++j;
    out.emplace_back(HarmonicSymbol::from_id(ids_[i]), static_cast<int>(j - i));
    i = j;
  }
  return out;
}

HarmonicMonomial HarmonicMonomial::operator*(const HarmonicMonomial& o) const {
  HarmonicMonomial r;
  r.ids_.resize(ids_.size() + o.ids_.size());
  std::merge(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), r.ids_.begin());
  return r;
}

// ---------------------------------------------------------------------------
// polynomials

HarmonicPoly::HarmonicPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(HarmonicMonomial(), constant);
}

HarmonicPoly HarmonicPoly::symbol(HarmonicSymbol s) {
  return term(Rational(1), HarmonicMonomial::symbol(s));
}

HarmonicPoly HarmonicPoly::term(const Rational& coefficient, const HarmonicMonomial& m) {
  HarmonicPoly p;
  if (!coefficient.is_zero()) p.terms_.emplace(m, coefficient);
  return p;
}

Rational HarmonicPoly::coeff(const HarmonicMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

void HarmonicPoly::add_term(const HarmonicMonomial& m, const Rational& q) {
  if (q.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HarmonicPoly& HarmonicPoly::operator+=(const HarmonicPoly& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, q);
  return *this;
}

HarmonicPoly& HarmonicPoly::operator-=(const HarmonicPoly& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, -q);
  return *this;
}

HarmonicPoly& HarmonicPoly::operator*=(const Rational& q) {
  if (q.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= q;
  return *this;
}

HarmonicPoly operator*(const HarmonicPoly& x, const HarmonicPoly& y) {
  HarmonicPoly r;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) r.add_term(mx * my, cx * cy);
  return r;
}

Rational HarmonicPoly::content() const {
  Rational g;
  for (const auto& [m, c] : terms_) g = rational_gcd(g, c);
  return g;
}

int HarmonicPoly::leading_sign() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second.sign();
}

int HarmonicPoly::min_kinv_power() const {
  if (terms_.empty()) return 0;
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int p = m.power_of(HarmonicSymbol::kinv());
    best = best < 0 ? p : std::min(best, p);
    if (best == 0) break;
  }
  return best;
}

HarmonicPoly HarmonicPoly::divided_by_kinv(int p) const {
  if (p == 0) return *this;
  HarmonicPoly out;
  for (const auto& [m, c] : terms_) {
    HarmonicMonomial reduced;
    int remaining = m.power_of(HarmonicSymbol::kinv()) - p;
    if (remaining < 0)
      throw std::logic_error("HarmonicPoly::divided_by_kinv: monomial not divisible");
    for (const auto& [s, e] : m.factors()) {
      if (s.is_kinv()) {
        if (remaining > 0) reduced = reduced * HarmonicMonomial::symbol(s, remaining);
      } else {
        reduced = reduced * HarmonicMonomial::symbol(s, e);
      }
    }
    out.add_term(reduced, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// evaluation and the shift rewrite

namespace {

Rational symbol_value(HarmonicSymbol s, long k) {
  if (s.is_kinv()) return Rational(1, k);
  long n = s.shifted() ? k - 1 : k;
  Rational acc;
  for (long j = 1; j <= n; ++j) {
    long base = s.family() == HarmonicSymbol::Family::h ? j : 2 * j - 1;
    acc += Rational(Integer(1), Integer(base)).pow(static_cast<unsigned>(s.order()));
  }
  return acc;
}

}  // namespace

Rational hpoly_eval(const HarmonicPoly& p, long k) {
  if (k < 1) throw std::invalid_argument("hpoly_eval: k must be >= 1");
  std::map<std::uint8_t, Rational> values;
  Rational acc;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (const auto& [s, e] : m.factors()) {
      auto it = values.find(s.id());
      if (it == values.end()) it = values.emplace(s.id(), symbol_value(s, k)).first;
      term *= it->second.pow(static_cast<unsigned>(e));
    }
    acc += term;
  }
  return acc;
}

HarmonicPoly hpoly_shift_rewrite(const HarmonicPoly& p) {
  HarmonicPoly out;
  for (const auto& [m, c] : p.terms()) {
    HarmonicPoly expanded(c);
    for (const auto& [s, e] : m.factors()) {
      HarmonicPoly factor;
      if (s.shifted() && s.family() == HarmonicSymbol::Family::h) {
        // H_{k-1}^(r) = H_k^(r) - (1/k)^r
        factor = HarmonicPoly::symbol(HarmonicSymbol::h(s.order()));
        factor -= HarmonicPoly::term(Rational(1),
                                     HarmonicMonomial::symbol(HarmonicSymbol::kinv(), s.order()));
      } else {
        factor = HarmonicPoly::symbol(s);
      }
      for (int i = 0; i < e; ++i) expanded = expanded * factor;
    }
    out += expanded;
  }
  return out;
}

// ---------------------------------------------------------------------------
// product expansion

namespace {

// Template for prod_{i<=n} (1 + x/d_i)^(+-1) as a series in x through degree
// six: exp( e * sum_r (-1)^(r+1) S_r x^r / r ) with S_r the power sum of the
// 1/d_i, i.e. H^(r) or O^(r). Coefficient r of the placeholder variable is a
// harmonic polynomial in the unshifted symbols.
using Template = std::array<HarmonicPoly, kMaxHarmonicOrder + 1>;

Template build_template(FactorShape shape, int exponent) {
  TruncatedSeries<HarmonicPoly> log_series(kMaxHarmonicOrder);
  for (int r = 1; r <= kMaxHarmonicOrder; ++r) {
    HarmonicSymbol s = shape == FactorShape::linear ? HarmonicSymbol::h(r) : HarmonicSymbol::o(r);
    Rational coeff = Rational((r % 2 == 1) ? 1 : -1, r) * Rational(exponent);
    HarmonicPoly c = HarmonicPoly::symbol(s);
    c *= coeff;
    log_series.add_term(Monomial::var(ParamVar::a, r), c);
  }
  TruncatedSeries<HarmonicPoly> series = log_series.exp();
  Template t;
  for (int r = 0; r <= kMaxHarmonicOrder; ++r)
    t[static_cast<size_t>(r)] = series.coeff(Monomial::var(ParamVar::a, r));
  t[0] = HarmonicPoly(Rational(1));
  return t;
}

const Template& expansion_template(FactorShape shape, int exponent) {
  static const Template linear_pos = build_template(FactorShape::linear, 1);
  static const Template linear_neg = build_template(FactorShape::linear, -1);
  static const Template odd_pos = build_template(FactorShape::odd, 1);
  static const Template odd_neg = build_template(FactorShape::odd, -1);
  if (shape == FactorShape::linear) return exponent > 0 ? linear_pos : linear_neg;
  return exponent > 0 ? odd_pos : odd_neg;
}

HarmonicPoly shift_symbols(const HarmonicPoly& p) {
  HarmonicPoly out;
  for (const auto& [m, c] : p.terms()) {
    HarmonicMonomial shifted;
    for (const auto& [s, e] : m.factors()) {
      HarmonicSymbol moved = s.family() == HarmonicSymbol::Family::h
                                 ? HarmonicSymbol::h(s.order(), 1)
                                 : HarmonicSymbol::o(s.order(), 1);
      shifted = shifted * HarmonicMonomial::symbol(moved, e);
    }
    out += HarmonicPoly::term(c, shifted);
  }
  return out;
}

}  // namespace

TruncatedSeries<HarmonicPoly> product_expansion(const ProductFactor& factor,
                                                int truncation_degree) {
  if (truncation_degree > kMaxHarmonicOrder)
    throw std::out_of_range("product_expansion: degree beyond template table (max 6)");
  if (factor.exponent != 1 && factor.exponent != -1)
    throw std::invalid_argument("product_expansion: exponent must be +1 or -1");
  if (factor.argument.is_zero())
    throw std::invalid_argument("product_expansion: zero argument");

  const Template& tmpl = expansion_template(factor.shape, factor.exponent);
  const bool shifted = factor.range == FactorRange::up_to_k_minus_1;

  TruncatedSeries<HarmonicPoly> result(truncation_degree);
  result.add_term(Monomial(), HarmonicPoly(Rational(1)));

  TruncatedSeries<Rational> arg = linear_series(factor.argument, truncation_degree);
  TruncatedSeries<Rational> power = arg;
  for (int r = 1; r <= truncation_degree; ++r) {
    if (r > 1) power = power * arg;
    if (power.is_zero()) break;
    HarmonicPoly coeff = shifted ? shift_symbols(tmpl[static_cast<size_t>(r)])
                                 : tmpl[static_cast<size_t>(r)];
    for (const auto& [mono, q] : power.terms()) {
      HarmonicPoly c = coeff;
      c *= q;
      result.add_term(mono, c);
    }
  }
  return result;
}

}  // namespace eulerforge
