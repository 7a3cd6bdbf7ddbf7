#include "eulerforge/verifier.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eulerforge {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

void WeightSequence::advance() {
  ++k_;
  switch (family_) {
    case WeightFamily::w1:
      value_.mul_ui(static_cast<unsigned long>(2 * k_ - 1));
      value_.div_ui(static_cast<unsigned long>(2 * k_));
      break;
    case WeightFamily::w2:
      value_.div_ui(2);
      break;
    case WeightFamily::w3:
      value_.mul_ui(static_cast<unsigned long>(3 * k_));
      value_.div_ui(static_cast<unsigned long>(2 * (2 * k_ - 1)));
      break;
  }
}

// ---------------------------------------------------------------------------
// tail model
//
// Everything below K is summed directly; the remainder is approximated by
// expanding the summand in the basis ln^p(k) * k^(-q) (times the k^(-1/2)
// carried by the weight) with exact ZetaPoly coefficients, then summing each
// basis term over k > K by Euler-Maclaurin. Coefficients stay symbolic until
// the very end.

namespace {

// asymptotic series: (ln-power p, k-exponent offset q) -> coefficient
using AsymSeries = std::map<std::pair<int, int>, ZetaPoly>;

void asym_add(AsymSeries& s, int p, int q, const ZetaPoly& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(p, q);
  auto it = s.find(key);
  if (it == s.end())
    s.emplace(key, c);
  else {
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
}

AsymSeries asym_mul(const AsymSeries& x, const AsymSeries& y, int max_q) {
  AsymSeries r;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      int q = kx.second + ky.second;
      if (q > max_q) continue;
      asym_add(r, kx.first + ky.first, q, cx * cy);
    }
  return r;
}

AsymSeries asym_constant(const ZetaPoly& c) {
  AsymSeries r;
  asym_add(r, 0, 0, c);
  return r;
}

Rational power_of_two(int e) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return Rational(v);
}

// (2k-1)^(-m) expanded in powers of 1/k through k^(-max_q):
// sum_t C(m+t-1, t) 2^(-(m+t)) k^(-(m+t)).
AsymSeries odd_power_expansion(int m, int max_q) {
  AsymSeries r;
  for (int t = 0; m + t <= max_q; ++t) {
    Rational coeff =
        Rational(binomial(static_cast<unsigned>(m + t - 1), static_cast<unsigned>(t))) /
        power_of_two(m + t);
    asym_add(r, 0, m + t, ZetaPoly(coeff));
  }
  return r;
}

// rising factorial r (r+1) ... (r+n-1)
Integer rising_factorial(int r, int n) {
  Integer acc(1);
  for (int j = 0; j < n; ++j) acc *= (r + j);
  return acc;
}

// Asymptotic expansion of one harmonic symbol through k^(-max_q).
AsymSeries symbol_asym(HarmonicSymbol s, int max_q) {
  AsymSeries r;
  const ZetaPoly one(Rational(1));
  const ZetaPoly gamma = ZetaPoly::symbol(ConstSymbol::euler_gamma());
  const ZetaPoly ln2 = ZetaPoly::symbol(ConstSymbol::ln2());

  if (s.is_kinv()) {
    asym_add(r, 0, 1, one);
    return r;
  }
  if (s.shifted())
    throw std::invalid_argument("tail_estimate: shifted symbol survived the rewrite");

  const int order = s.order();
  if (s.family() == HarmonicSymbol::Family::h) {
    if (order == 1) {
      // H_k = ln k + gamma + 1/(2k) - sum_j B_{2j}/(2j) k^(-2j)
      asym_add(r, 1, 0, one);
      asym_add(r, 0, 0, gamma);
      asym_add(r, 0, 1, ZetaPoly(Rational(1, 2)));
      for (int j = 1; 2 * j <= max_q; ++j)
        asym_add(r, 0, 2 * j, ZetaPoly(-bernoulli(2 * static_cast<unsigned>(j)) / Rational(2 * j)));
      return r;
    }
    // H^(r) = zeta(r) - k^(1-r)/(r-1) + k^(-r)/2
    //         - sum_j B_{2j}/(2j)! rising(r, 2j-1) k^(-(r+2j-1))
    asym_add(r, 0, 0, ZetaPoly::symbol(ConstSymbol::zeta(order)));
    if (order - 1 <= max_q) asym_add(r, 0, order - 1, ZetaPoly(Rational(-1, order - 1)));
    if (order <= max_q) asym_add(r, 0, order, ZetaPoly(Rational(1, 2)));
    for (int j = 1; order + 2 * j - 1 <= max_q; ++j) {
      Rational c = -bernoulli(2 * static_cast<unsigned>(j)) /
                   Rational(factorial(2 * static_cast<unsigned>(j))) *
                   Rational(rising_factorial(order, 2 * j - 1));
      asym_add(r, 0, order + 2 * j - 1, ZetaPoly(c));
    }
    return r;
  }

  // odd family
  if (order == 1) {
    // O_k = ln2 + ln(k)/2 + gamma/2 + sum_j B_{2j}/(2j) (1/2 - 4^(-j)) k^(-2j)
    asym_add(r, 1, 0, ZetaPoly(Rational(1, 2)));
    asym_add(r, 0, 0, ln2 + ZetaPoly(Rational(1, 2)) * gamma);
    for (int j = 1; 2 * j <= max_q; ++j) {
      Rational c = bernoulli(2 * static_cast<unsigned>(j)) / Rational(2 * j) *
                   (Rational(1, 2) - power_of_two(2 * j).inverse());
      asym_add(r, 0, 2 * j, ZetaPoly(c));
    }
    return r;
  }
  // O^(r) = (1 - 2^-r) zeta(r) - S,
  // S = (2k-1)^(1-r)/(2(r-1)) - (2k-1)^(-r)/2
  //     + sum_j B_{2j}/(2j)! 2^(2j-1) rising(r, 2j-1) (2k-1)^(-(r+2j-1))
  Rational lead = Rational(1) - power_of_two(order).inverse();
  asym_add(r, 0, 0, ZetaPoly::symbol(ConstSymbol::zeta(order)) * lead);
  AsymSeries tail;
  {
    AsymSeries t = odd_power_expansion(order - 1, max_q);
    for (const auto& [key, c] : t)
      asym_add(tail, key.first, key.second, c * Rational(1, 2 * (order - 1)));
  }
  {
    AsymSeries t = odd_power_expansion(order, max_q);
    for (const auto& [key, c] : t)
      asym_add(tail, key.first, key.second, c * Rational(-1, 2));
  }
  for (int j = 1; order + 2 * j - 1 <= max_q; ++j) {
    Rational c = bernoulli(2 * static_cast<unsigned>(j)) /
                 Rational(factorial(2 * static_cast<unsigned>(j))) * power_of_two(2 * j - 1) *
                 Rational(rising_factorial(order, 2 * j - 1));
    AsymSeries t = odd_power_expansion(order + 2 * j - 1, max_q);
    for (const auto& [key, cc] : t) asym_add(tail, key.first, key.second, cc * c);
  }
  for (const auto& [key, c] : tail) asym_add(r, key.first, key.second, -c);
  return r;
}

// C(2k,k)/4^k * sqrt(pi k) = 1 - 1/(8k) + 1/(128k^2) + 5/(1024k^3) - 21/(32768k^4) + ...
AsymSeries weight_correction(int max_q) {
  static const Rational coeffs[] = {Rational(1), Rational(-1, 8), Rational(1, 128),
                                    Rational(5, 1024), Rational(-21, 32768)};
  AsymSeries r;
  for (int q = 0; q <= std::min(max_q, 4); ++q) asym_add(r, 0, q, ZetaPoly(coeffs[q]));
  return r;
}

// sum_{k>K} ln^p(k) k^(-s) with s = s2/2, via Euler-Maclaurin:
//   integral - f(K)/2 - f'(K)/12 + f'''(K)/720.
struct LogPowerTerm {
  Rational coeff;
  int p;
  int s2;
};

std::vector<LogPowerTerm> differentiate(const std::vector<LogPowerTerm>& terms) {
  std::vector<LogPowerTerm> out;
  for (const auto& t : terms) {
    if (t.p > 0) out.push_back({t.coeff * Rational(t.p), t.p - 1, t.s2 + 2});
    out.push_back({t.coeff * Rational(-t.s2, 2), t.p, t.s2 + 2});
  }
  return out;
}

BigFloat eval_log_power_terms(const std::vector<LogPowerTerm>& terms, const BigFloat& ln_k,
                              const BigFloat& sqrt_k, mpfr_prec_t wp) {
  BigFloat acc(wp);
  for (const auto& t : terms) {
    BigFloat v = BigFloat::of(t.coeff, wp);
    if (t.p > 0) v *= ln_k.pow_si(t.p);
    v *= sqrt_k.pow_si(-t.s2);
    acc += v;
  }
  return acc;
}

BigFloat tail_sum_basis(int p, int s2, long cutoff, const BigFloat& ln_k, const BigFloat& sqrt_k,
                        mpfr_prec_t wp) {
  // integral: K^(1-s) sum_{j=0}^{p} p!/(p-j)! ln^(p-j)(K) / (s-1)^(j+1)
  BigFloat integral(wp);
  Rational falling(1);
  const Rational s_minus_1 = Rational(s2 - 2, 2);
  for (int j = 0; j <= p; ++j) {
    if (j > 0) falling *= Rational(p - j + 1);
    BigFloat v = BigFloat::of(falling / s_minus_1.pow(static_cast<unsigned>(j) + 1), wp);
    if (p - j > 0) v *= ln_k.pow_si(p - j);
    integral += v;
  }
  integral *= sqrt_k.pow_si(2 - s2);

  std::vector<LogPowerTerm> f = {{Rational(1), p, s2}};
  std::vector<LogPowerTerm> f1 = differentiate(f);
  std::vector<LogPowerTerm> f3 = differentiate(differentiate(f1));

  BigFloat result = integral;
  BigFloat fk = eval_log_power_terms(f, ln_k, sqrt_k, wp);
  fk.div_ui(2);
  result -= fk;
  BigFloat f1k = eval_log_power_terms(f1, ln_k, sqrt_k, wp);
  f1k.div_ui(12);
  result -= f1k;
  BigFloat f3k = eval_log_power_terms(f3, ln_k, sqrt_k, wp);
  f3k.div_ui(720);
  result += f3k;
  (void)cutoff;
  return result;
}

}  // namespace

TailEstimate tail_estimate(WeightFamily family, const HarmonicPoly& poly, int denom_exponent,
                           long cutoff, int tail_order, mpfr_prec_t precision_bits) {
  if (family != WeightFamily::w1)
    throw std::invalid_argument("tail_estimate: only the central-binomial family is supported");
  if (cutoff < 1000)
    throw std::invalid_argument("tail_estimate: cutoff must be at least 1000");
  if (tail_order < 1 || tail_order > 3)
    throw std::invalid_argument("tail_estimate: tail order must be 1..3");

  const mpfr_prec_t wp = precision_bits + 16;
  const int max_q = tail_order + 1;

  HarmonicPoly rewritten = hpoly_shift_rewrite(poly);
  AsymSeries acc;
  for (const auto& [mono, coeff] : rewritten.terms()) {
    AsymSeries term = asym_constant(ZetaPoly(coeff));
    for (const auto& [sym, e] : mono.factors()) {
      AsymSeries sa = symbol_asym(sym, max_q);
      for (int i = 0; i < e; ++i) term = asym_mul(term, sa, max_q);
    }
    for (const auto& [key, c] : term) asym_add(acc, key.first, key.second, c);
  }
  acc = asym_mul(acc, weight_correction(max_q), max_q);

  const BigFloat ln_k = BigFloat::of(cutoff, wp).log();
  const BigFloat sqrt_k = BigFloat::of(cutoff, wp).sqrt();

  BigFloat correction(wp);
  BigFloat bound(wp);
  for (const auto& [key, c] : acc) {
    const auto [p, q] = key;
    const int s2 = 1 + 2 * (denom_exponent + q);
    BigFloat value = zetapoly_eval(c, wp) * tail_sum_basis(p, s2, cutoff, ln_k, sqrt_k, wp);
    if (q <= tail_order)
      correction += value;
    else
      bound += value.abs();
  }
  const BigFloat inv_sqrt_pi = BigFloat::of(1L, wp) / pi_value(wp).sqrt();
  correction *= inv_sqrt_pi;
  bound *= inv_sqrt_pi;
  bound.mul_ui(8);  // safety factor on the first omitted order
  BigFloat floor = correction.abs();
  floor *= BigFloat::two_to(-static_cast<long>(precision_bits) + 40, 64);
  bound += floor;
  return {correction.rounded_to(precision_bits), bound.rounded_to(precision_bits)};
}

// ---------------------------------------------------------------------------
// verification

namespace {

struct SymbolState {
  HarmonicSymbol symbol;
  BigFloat value;
};

struct MonomialPlan {
  Rational coeff;
  std::vector<std::pair<size_t, int>> powers;  // (state index, exponent)
};

}  // namespace

VerifyReport verify(const Identity& identity, const VerifyConfig& cfg) {
  if (identity.rhs.depends_on_gamma())
    throw std::invalid_argument("verify: Euler gamma present in the right side of '" +
                                identity.id + "'");
  const WeightFamily family = identity.lhs.weight;
  const double tol = cfg.tolerance_for(family);
  const long max_terms = cfg.max_terms_for(family);
  const mpfr_prec_t wp = cfg.precision_bits + 16;

  const BigFloat tol_value = BigFloat::of(tol, 64);
  if (!(tol_value > BigFloat::two_to(-static_cast<long>(cfg.precision_bits) + 64, 64)))
    throw std::invalid_argument("verify: tolerance is finer than the precision supports");

  VerifyReport report;
  report.id = identity.id;

  // evaluation plan
  std::vector<SymbolState> states;
  auto state_index = [&](HarmonicSymbol s) {
    for (size_t i = 0; i < states.size(); ++i)
      if (states[i].symbol == s) return i;
    states.push_back({s, BigFloat(wp)});
    return states.size() - 1;
  };
  std::vector<MonomialPlan> plan;
  for (const auto& [mono, coeff] : identity.lhs.poly.terms()) {
    MonomialPlan mp;
    mp.coeff = coeff;
    for (const auto& [sym, e] : mono.factors()) mp.powers.emplace_back(state_index(sym), e);
    plan.push_back(std::move(mp));
  }

  BigFloat sum(wp);
  WeightSequence weight(family, wp);
  Integer scratch;
  for (long k = 1; k <= max_terms; ++k) {
    weight.advance();
    // leading symbols accumulate their k-th term before use
    for (auto& st : states) {
      const auto& s = st.symbol;
      if (s.is_kinv()) {
        st.value = BigFloat::of(1L, wp);
        st.value.div_ui(static_cast<unsigned long>(k));
      } else if (!s.shifted()) {
        long base = s.family() == HarmonicSymbol::Family::h ? k : 2 * k - 1;
        mpz_ui_pow_ui(scratch.get_mpz_t(), static_cast<unsigned long>(base),
                      static_cast<unsigned long>(s.order()));
        BigFloat t = BigFloat::of(1L, wp);
        t.div_integer(scratch);
        st.value += t;
      }
    }
    BigFloat poly_value(wp);
    for (const auto& mp : plan) {
      BigFloat term = BigFloat::of(mp.coeff, wp);
      for (const auto& [idx, e] : mp.powers)
        for (int rep = 0; rep < e; ++rep) term *= states[idx].value;
      poly_value += term;
    }
    BigFloat term = weight.value() * poly_value;
    mpz_ui_pow_ui(scratch.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(identity.lhs.denom_exponent));
    term.div_integer(scratch);
    sum += term;
    // trailing (index k-1) symbols advance after use
    for (auto& st : states) {
      const auto& s = st.symbol;
      if (!s.is_kinv() && s.shifted()) {
        long base = s.family() == HarmonicSymbol::Family::h ? k : 2 * k - 1;
        mpz_ui_pow_ui(scratch.get_mpz_t(), static_cast<unsigned long>(base),
                      static_cast<unsigned long>(s.order()));
        BigFloat t = BigFloat::of(1L, wp);
        t.div_integer(scratch);
        st.value += t;
      }
    }
  }
  report.terms_used = max_terms;

  BigFloat tail_bound(wp);
  if (family == WeightFamily::w1 && !identity.lhs.poly.is_zero()) {
    TailEstimate tail = tail_estimate(family, identity.lhs.poly, identity.lhs.denom_exponent,
                                      max_terms, cfg.tail_order, cfg.precision_bits);
    sum += tail.correction;
    tail_bound = tail.bound;
    report.tail_applied = true;
    report.tail_correction = tail.correction.str();
    report.tail_bound = tail.bound.str();
  }

  BigFloat rhs_value = zetapoly_eval(identity.rhs, wp);
  BigFloat lhs_value = sum.rounded_to(cfg.precision_bits);
  BigFloat diff = (sum - rhs_value).abs().rounded_to(cfg.precision_bits);

  report.lhs_value = lhs_value.str();
  report.rhs_value = rhs_value.rounded_to(cfg.precision_bits).str();
  report.abs_diff = diff.str();
  if (report.tail_applied && !(tol_value > tail_bound)) {
    report.verdict = Verdict::indeterminate;
  } else {
    report.verdict = diff <= tol_value ? Verdict::pass : Verdict::fail;
  }
  return report;
}

VerifyOutcome verify_catalog(const std::vector<Identity>& identities, const VerifyConfig& cfg,
                             const std::map<std::string, std::string>& allowlist_notes) {
  VerifyOutcome outcome;
  outcome.reports.reserve(identities.size());
  for (const auto& identity : identities) {
    VerifyReport report;
    try {
      report = verify(identity, cfg);
    } catch (const std::exception& e) {
      report.id = identity.id;
      report.verdict = Verdict::fail;
      report.error = e.what();
    }
    auto note = allowlist_notes.find(identity.id);
    if (note != allowlist_notes.end()) {
      report.allowlisted = true;
      report.allowlist_note = note->second;
    }
    switch (report.verdict) {
      case Verdict::pass: ++outcome.passes; break;
      case Verdict::indeterminate: ++outcome.indeterminate; break;
      case Verdict::fail:
        if (report.allowlisted)
          ++outcome.allowlisted_failures;
        else
          ++outcome.failures;
        break;
    }
    outcome.reports.push_back(std::move(report));
  }
  return outcome;
}

}  // namespace eulerforge
