#include "eulerforge/descriptors.hpp"

#include <stdexcept>

namespace eulerforge {

std::string weight_name(WeightFamily w) {
  switch (w) {
    case WeightFamily::w1: return "W1";
    case WeightFamily::w2: return "W2";
    case WeightFamily::w3: return "W3";
  }
  return "?";
}

WeightFamily parse_weight(std::string_view name) {
  if (name == "W1") return WeightFamily::w1;
  if (name == "W2") return WeightFamily::w2;
  if (name == "W3") return WeightFamily::w3;
  throw std::invalid_argument("parse_weight: unknown family '" + std::string(name) + "'");
}

namespace {

LinearForm A() { return LinearForm::var(ParamVar::a); }
LinearForm B() { return LinearForm::var(ParamVar::b); }
LinearForm C() { return LinearForm::var(ParamVar::c); }
LinearForm D() { return LinearForm::var(ParamVar::d); }
Rational half() { return Rational(1, 2); }

ProductFactor factor(FactorShape shape, int exponent, FactorRange range, LinearForm arg) {
  return ProductFactor{shape, exponent, range, std::move(arg)};
}

GammaFactor gamma1(int exponent, LinearForm arg) {
  return GammaFactor{exponent, GammaBase::one_plus, std::move(arg)};
}

GammaFactor gamma_half(int exponent, LinearForm arg) {
  return GammaFactor{exponent, GammaBase::half_plus, std::move(arg)};
}

// 2F1(1/2 + a, b; 1 + c; 1) after the a -> a + 1/2, c -> c + 1 substitutions
// of the Gauss sum.
TheoremDescriptor make_gauss() {
  TheoremDescriptor d;
  d.name = "gauss";
  d.prefactor_coeff = Rational(1);
  d.prefactor = Monomial::var(ParamVar::b);
  d.weight = WeightFamily::w1;
  d.base_denom_exponent = 1;
  d.lhs_factors = {
      factor(FactorShape::odd, +1, FactorRange::up_to_k, A() * Rational(2)),
      factor(FactorShape::linear, +1, FactorRange::up_to_k_minus_1, B()),
      factor(FactorShape::linear, -1, FactorRange::up_to_k, C()),
  };
  d.rhs_factors = {
      gamma1(+1, C()),
      gamma_half(+1, C() - A() - B()),
      gamma_half(-1, C() - A()),
      gamma1(-1, C() - B()),
  };
  d.raw.upper = {{half(), A()}, {Rational(0), B()}};
  d.raw.lower = {{Rational(1), C()}};
  d.raw.argument = Rational(1);
  d.conditions = {{C() - A() - B(), half()}};
  return d;
}

// 3F2(1 + a, b, 1/2 + c; 1 + a/2 + b/2, 1 + 2c; 1) after a -> a + 1,
// c -> c + 1/2 in the Watson sum.
TheoremDescriptor make_watson() {
  TheoremDescriptor d;
  d.name = "watson";
  d.prefactor_coeff = Rational(1);
  d.prefactor = Monomial::var(ParamVar::b);
  d.weight = WeightFamily::w1;
  d.base_denom_exponent = 1;
  LinearForm ab2 = (A() + B()) * half();
  d.lhs_factors = {
      factor(FactorShape::linear, +1, FactorRange::up_to_k, A()),
      factor(FactorShape::odd, +1, FactorRange::up_to_k, C() * Rational(2)),
      factor(FactorShape::linear, +1, FactorRange::up_to_k_minus_1, B()),
      factor(FactorShape::linear, -1, FactorRange::up_to_k, ab2),
      factor(FactorShape::linear, -1, FactorRange::up_to_k, C() * Rational(2)),
  };
  d.rhs_factors = {
      gamma_half(+1, LinearForm()),  // the lone Gamma(1/2)
      gamma1(+1, C()),
      gamma1(+1, ab2),
      gamma_half(+1, C() - ab2),
      gamma1(-1, A() * half()),
      gamma_half(-1, B() * half()),
      gamma_half(-1, C() - A() * half()),
      gamma1(-1, C() - B() * half()),
  };
  d.raw.upper = {{Rational(1), A()}, {Rational(0), B()}, {half(), C()}};
  d.raw.lower = {{Rational(1), ab2}, {Rational(1), C() * Rational(2)}};
  d.raw.argument = Rational(1);
  d.conditions = {{C() * Rational(2) - A() - B(), Rational(1)}};
  return d;
}

// 2F1(a, 1 - a; 1 + c; 1/2) after c -> c + 1 in the Bailey sum.
TheoremDescriptor make_bailey() {
  TheoremDescriptor d;
  d.name = "bailey";
  d.prefactor_coeff = Rational(1);
  d.prefactor = Monomial::var(ParamVar::a);
  d.weight = WeightFamily::w2;
  d.base_denom_exponent = 1;
  d.lhs_factors = {
      factor(FactorShape::linear, +1, FactorRange::up_to_k_minus_1, A()),
      factor(FactorShape::linear, +1, FactorRange::up_to_k, -A()),
      factor(FactorShape::linear, -1, FactorRange::up_to_k, C()),
  };
  d.rhs_factors = {
      gamma_half(+1, C() * half()),
      gamma1(+1, C() * half()),
      gamma_half(-1, (C() + A()) * half()),
      gamma1(-1, (C() - A()) * half()),
  };
  d.raw.upper = {{Rational(0), A()}, {Rational(1), -A()}};
  d.raw.lower = {{Rational(1), C()}};
  d.raw.argument = half();
  // geometric argument: the series converges for any small parameters, so the
  // only runtime guards are the pole checks during evaluation
  return d;
}

// 3F2(b, d, (b+d)/3; (b+d)/2, (1+b+d)/2; 3/4), already in final form.
TheoremDescriptor make_wang() {
  TheoremDescriptor d;
  d.name = "wang";
  d.prefactor_coeff = Rational(2, 3);
  d.prefactor = Monomial::var(ParamVar::b) * Monomial::var(ParamVar::d);
  d.weight = WeightFamily::w3;
  d.base_denom_exponent = 2;
  LinearForm bd = B() + D();
  d.lhs_factors = {
      factor(FactorShape::linear, +1, FactorRange::up_to_k_minus_1, B()),
      factor(FactorShape::linear, +1, FactorRange::up_to_k_minus_1, D()),
      factor(FactorShape::linear, +1, FactorRange::up_to_k_minus_1, bd * Rational(1, 3)),
      factor(FactorShape::linear, -1, FactorRange::up_to_k_minus_1, bd * half()),
      factor(FactorShape::odd, -1, FactorRange::up_to_k, bd),
  };
  d.rhs_factors = {
      gamma1(+1, bd),
      gamma1(+1, B() * Rational(1, 3)),
      gamma1(+1, D() * Rational(1, 3)),
      gamma1(-1, B()),
      gamma1(-1, D()),
      gamma1(-1, bd * Rational(1, 3)),
  };
  d.raw.upper = {{Rational(0), B()}, {Rational(0), D()}, {Rational(0), bd * Rational(1, 3)}};
  d.raw.lower = {{Rational(0), bd * half()}, {half(), bd * half()}};
  d.raw.argument = Rational(3, 4);
  d.conditions = {{-(B() + D()) * Rational(2), Rational(3)}};
  return d;
}

}  // namespace

const TheoremDescriptor& descriptor(std::string_view name) {
  static const TheoremDescriptor gauss = make_gauss();
  static const TheoremDescriptor watson = make_watson();
  static const TheoremDescriptor bailey = make_bailey();
  static const TheoremDescriptor wang = make_wang();
  if (name == "gauss") return gauss;
  if (name == "watson") return watson;
  if (name == "bailey") return bailey;
  if (name == "wang") return wang;
  throw std::invalid_argument("descriptor: unknown theorem '" + std::string(name) + "'");
}

const std::vector<const TheoremDescriptor*>& all_descriptors() {
  static const std::vector<const TheoremDescriptor*> all = {
      &descriptor("gauss"), &descriptor("watson"), &descriptor("bailey"), &descriptor("wang")};
  return all;
}

namespace {

void check_conditions(const TheoremDescriptor& d, const ParamValues& params) {
  for (const auto& cond : d.conditions) {
    if (!(cond.offset + cond.linear.eval(params) > Rational(0)))
      throw std::domain_error("descriptor '" + d.name + "': convergence condition violated");
  }
}

Rational prefactor_value(const TheoremDescriptor& d, const ParamValues& params) {
  Rational v = d.prefactor_coeff;
  for (int i = 0; i < kNumParams; ++i) {
    int e = d.prefactor.exponent(static_cast<ParamVar>(i));
    if (e > 0) v *= params[static_cast<size_t>(i)].pow(static_cast<unsigned>(e));
  }
  return v;
}

}  // namespace

BigFloat descriptor_term_numeric(const TheoremDescriptor& d, const ParamValues& params,
                                 long max_terms, mpfr_prec_t precision_bits) {
  check_conditions(d, params);
  const mpfr_prec_t wp = precision_bits + 16;
  const Rational pref = prefactor_value(d, params);
  if (pref.is_zero()) return BigFloat::of(1L, wp).rounded_to(precision_bits);

  const size_t nf = d.lhs_factors.size();
  std::vector<Rational> arg_values(nf);
  for (size_t i = 0; i < nf; ++i) arg_values[i] = d.lhs_factors[i].argument.eval(params);
  std::vector<BigFloat> running(nf, BigFloat::of(1L, wp));

  BigFloat weight = BigFloat::of(1L, wp);
  BigFloat sum(wp);
  for (long k = 1; k <= max_terms; ++k) {
    switch (d.weight) {
      case WeightFamily::w1:
        weight.mul_ui(static_cast<unsigned long>(2 * k - 1));
        weight.div_ui(static_cast<unsigned long>(2 * k));
        break;
      case WeightFamily::w2:
        weight.div_ui(2);
        break;
      case WeightFamily::w3:
        weight.mul_ui(static_cast<unsigned long>(3 * k));
        weight.div_ui(static_cast<unsigned long>(2 * (2 * k - 1)));
        break;
    }
    // bring every product up to its bound for this k
    for (size_t i = 0; i < nf; ++i) {
      const auto& f = d.lhs_factors[i];
      if (f.range == FactorRange::up_to_k) {
        long denom = f.shape == FactorShape::linear ? k : 2 * k - 1;
        Rational v = Rational(1) + arg_values[i] / Rational(denom);
        if (f.exponent < 0) {
          if (v.is_zero())
            throw std::domain_error("descriptor '" + d.name + "': division by zero in a factor");
          running[i] /= v;
        } else {
          running[i] *= v;
        }
      }
    }
    BigFloat term = weight;
    Integer kpow;
    mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(d.base_denom_exponent));
    term.div_integer(kpow);
    for (size_t i = 0; i < nf; ++i) term *= running[i];
    sum += term;
    // trailing products (bound k-1) advance after use
    for (size_t i = 0; i < nf; ++i) {
      const auto& f = d.lhs_factors[i];
      if (f.range == FactorRange::up_to_k_minus_1) {
        long denom = f.shape == FactorShape::linear ? k : 2 * k - 1;
        Rational v = Rational(1) + arg_values[i] / Rational(denom);
        if (f.exponent < 0) {
          if (v.is_zero())
            throw std::domain_error("descriptor '" + d.name + "': division by zero in a factor");
          running[i] /= v;
        } else {
          running[i] *= v;
        }
      }
    }
  }
  sum *= pref;
  sum += Rational(1);
  return sum.rounded_to(precision_bits);
}

BigFloat raw_hypergeometric_numeric(const TheoremDescriptor& d, const ParamValues& params,
                                    long max_terms, mpfr_prec_t precision_bits) {
  check_conditions(d, params);
  const mpfr_prec_t wp = precision_bits + 16;
  std::vector<Rational> upper, lower;
  for (const auto& p : d.raw.upper) upper.push_back(p.shift + p.linear.eval(params));
  for (const auto& p : d.raw.lower) lower.push_back(p.shift + p.linear.eval(params));

  BigFloat sum = BigFloat::of(1L, wp);
  BigFloat term = BigFloat::of(1L, wp);
  for (long n = 1; n <= max_terms; ++n) {
    Rational off(n - 1);
    for (const auto& u : upper) term *= (u + off);
    for (const auto& l : lower) {
      Rational v = l + off;
      if (v.is_zero())
        throw std::domain_error("raw series '" + d.name + "': lower parameter hit a pole");
      term /= v;
    }
    term *= d.raw.argument;
    term.div_ui(static_cast<unsigned long>(n));
    sum += term;
  }
  return sum.rounded_to(precision_bits);
}

BigFloat gamma_ratio_numeric(const std::vector<GammaFactor>& factors, const ParamValues& params,
                             mpfr_prec_t precision_bits) {
  const mpfr_prec_t wp = precision_bits + 16;
  BigFloat result = BigFloat::of(1L, wp);
  for (const auto& f : factors) {
    Rational arg = f.argument.eval(params);
    arg += f.base == GammaBase::one_plus ? Rational(1) : Rational(1, 2);
    BigFloat x = BigFloat::of(arg, wp);
    BigFloat g(wp);
    mpfr_gamma(g.get(), x.get(), MPFR_RNDN);
    if (f.exponent > 0)
      result *= g;
    else
      result /= g;
  }
  return result.rounded_to(precision_bits);
}

}  // namespace eulerforge
