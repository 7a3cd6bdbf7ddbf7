#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulerforge/constants.hpp"
#include "eulerforge/descriptors.hpp"
#include "eulerforge/gamma_series.hpp"
#include "support/oracles.hpp"

using namespace eulerforge;

namespace {

ZetaPoly zp(const char* expr) { return parse_zeta_expr(expr); }

Monomial mono(const char* s) { return Monomial::parse(s); }

bool close(const BigFloat& x, const BigFloat& y, long bits) {
  return (x - y).abs() < BigFloat::two_to(-bits, 64);
}

}  // namespace

TEST_CASE("sigma tau normalization") {
  CHECK(sigma_tau_normalize(SigmaTau::tau, 1) == zp("gamma+2*ln2"));
  CHECK(sigma_tau_normalize(SigmaTau::sigma, 2) == zp("zeta2"));
  CHECK(sigma_tau_normalize(SigmaTau::tau, 3) == zp("7*zeta3"));
  CHECK(sigma_tau_normalize(SigmaTau::sigma, 1) == zp("gamma"));
  CHECK(sigma_tau_normalize(SigmaTau::tau, 4) == zp("15*zeta4"));
  CHECK_THROWS_AS(sigma_tau_normalize(SigmaTau::sigma, 0), std::invalid_argument);
}

TEST_CASE("zetapoly algebra") {
  ZetaPoly x = zp("3/2*zeta2-ln2^2");
  ZetaPoly y = zp("ln2^2+3/2*zeta2");
  CHECK(x + zp("2*ln2^2") == y);
  CHECK(zp("2*ln2") * zp("3*zeta2") == zp("6*zeta2*ln2"));
  CHECK((x - x).is_zero());
  CHECK(zp("gamma+2*ln2").depends_on_gamma());
  CHECK_FALSE(zp("7*zeta3").depends_on_gamma());
}

TEST_CASE("gamma factor series: empty product is 1") {
  auto s = rhs_gamma_series({}, 4);
  CHECK(s == TruncatedSeries<ZetaPoly>::one(4));
}

TEST_CASE("gamma factor series: unbalanced half shifts rejected") {
  std::vector<GammaFactor> bad = {
      {+1, GammaBase::half_plus, LinearForm::var(ParamVar::a)},
      {-1, GammaBase::one_plus, LinearForm::var(ParamVar::a)},
  };
  CHECK_THROWS_AS(rhs_gamma_series(bad, 3), std::invalid_argument);
}

TEST_CASE("gamma factor series reproduces the classical expansions") {
  auto gauss = rhs_gamma_series(descriptor("gauss").rhs_factors, 5);
  CHECK(gauss.coeff(Monomial()) == ZetaPoly(Rational(1)));
  CHECK(gauss.coeff(mono("b1")) == zp("2*ln2"));
  CHECK(gauss.coeff(mono("a1b1")) == zp("3*zeta2"));
  CHECK(gauss.coeff(mono("b1c1")) == zp("-2*zeta2"));
  CHECK(gauss.coeff(mono("b2")) == zp("zeta2+2*ln2^2"));
  // no term without b
  CHECK(gauss.coeff(mono("a1")).is_zero());
  CHECK(gauss.coeff(mono("a2c1")).is_zero());
  // gamma cancels everywhere
  for (const auto& [m, c] : gauss.terms()) CHECK_FALSE(c.depends_on_gamma());

  auto watson = rhs_gamma_series(descriptor("watson").rhs_factors, 4);
  CHECK(watson.coeff(mono("b1")) == zp("2*ln2"));
  CHECK(watson.coeff(mono("a1b1")) == zp("zeta2"));
  CHECK(watson.coeff(mono("b1c1")) == zp("-zeta2"));

  auto bailey = rhs_gamma_series(descriptor("bailey").rhs_factors, 4);
  CHECK(bailey.coeff(mono("a1")) == zp("ln2"));
  CHECK(bailey.coeff(mono("a1c1")) == zp("-1/2*zeta2"));

  auto wang = rhs_gamma_series(descriptor("wang").rhs_factors, 5);
  CHECK(wang.coeff(mono("b1d1")) == zp("8/9*zeta2"));
  CHECK(wang.coeff(mono("b2d1")) == zp("-26/27*zeta3"));
  CHECK(wang.coeff(mono("b1d2")) == zp("-26/27*zeta3"));
  CHECK(wang.coeff(mono("b3d1")) == zp("80/81*zeta4"));
  CHECK(wang.coeff(mono("b1")).is_zero());
}

TEST_CASE("rendering") {
  CHECK(render(zp("3/2*zeta2"), true) == "π²/4");
  CHECK(render(zp("zeta3"), true) == "ζ(3)");
  CHECK(render(zp("gamma+2*ln2"), false) == "γ + 2ln2");
  CHECK(render(zp("gamma+2*ln2"), true) == "γ + 2ln2");
  CHECK(render(zp("zeta2+2*ln2^2"), true) == "π²/6 + 2ln²2");
  CHECK(render(ZetaPoly(), true) == "0");
  CHECK(render(zp("7/2*zeta3-3*zeta2*ln2"), true) ==
        "7ζ(3)/2 - π²ln2/2");
  // zeta(2)^2 renders as pi^4/36
  CHECK(render(zp("zeta2^2"), true) == "π⁴/36");
  CHECK(render(zp("zeta2^2"), false) == "ζ(2)²");

  CHECK(render_latex(zp("3/2*zeta2"), true) == "\\frac{\\pi^2}{4}");
  CHECK(render_latex(zp("zeta3"), false) == "\\zeta(3)");
  CHECK(render_latex(zp("7/2*zeta3"), true) == "\\frac{7\\zeta(3)}{2}");
}

TEST_CASE("constant evaluation against frozen references and library oracles") {
  // ln 2 via the artanh series vs a 50-digit reference and mpfr's own log
  BigFloat ln2 = eval_constant(ConstSymbol::ln2(), 160);
  CHECK(close(ln2, oracle::from_decimal("0.693147180559945309417232121458176568075500134360255254120680009493393622", 200), 158));
  BigFloat mpfr_ln2(200);
  mpfr_const_log2(mpfr_ln2.get(), MPFR_RNDN);
  CHECK(close(ln2, mpfr_ln2, 158));

  // zeta(3) via Euler-Maclaurin vs reference and mpfr_zeta_ui
  BigFloat z3 = eval_constant(ConstSymbol::zeta(3), 192);
  CHECK(close(z3, oracle::from_decimal("1.20205690315959428539973816151144999076498629234049888179227155534183821", 256), 190));
  BigFloat mpfr_z3(256);
  mpfr_zeta_ui(mpfr_z3.get(), 3, MPFR_RNDN);
  CHECK(close(z3, mpfr_z3, 190));

  // pi via two distinct Machin-type formulas and mpfr_const_pi
  BigFloat pi = pi_value(192);
  CHECK(close(pi, oracle::from_decimal("3.14159265358979323846264338327950288419716939937510582097494459230781641", 256), 190));
  CHECK(close(pi, oracle::pi_euler_machin(192), 188));
  BigFloat mpfr_pi(256);
  mpfr_const_pi(mpfr_pi.get(), MPFR_RNDN);
  CHECK(close(pi, mpfr_pi, 190));

  // independent cutoffs agree: the cache distinguishes precisions, so
  // evaluating at two precisions exercises two Euler-Maclaurin configurations
  BigFloat z5a = eval_constant(ConstSymbol::zeta(5), 128);
  BigFloat z5b = eval_constant(ConstSymbol::zeta(5), 320);
  CHECK(close(z5a, z5b, 126));

  CHECK_THROWS_AS(eval_constant(ConstSymbol::ln2(), 32), std::invalid_argument);
}

TEST_CASE("zetapoly evaluation") {
  CHECK(zetapoly_eval(ZetaPoly(), 128).is_zero());
  BigFloat v = zetapoly_eval(zp("3/2*zeta2"), 192);
  BigFloat quarter_pi2 = pi_value(192) * pi_value(192);
  quarter_pi2.div_ui(4);
  CHECK(close(v, quarter_pi2, 186));
  CHECK(close(zetapoly_eval(zp("7*zeta3"), 192),
              oracle::from_decimal("8.41439832211715999779816713058014993535490404638349217254590088739286744", 256),
              188));
}

TEST_CASE("gamma series numeric consistency under parameter halving") {
  // evaluating the truncated series at v and the literal Gamma ratio at v
  // must agree to O(|v|^(N+1)): halving v divides the gap by at least 2^N/4
  const auto& d = descriptor("gauss");
  const int n = 4;
  auto series = rhs_gamma_series(d.rhs_factors, n);
  const mpfr_prec_t prec = 256;
  ParamValues v = {Rational(1, 9), Rational(1, 7), Rational(1, 8), Rational()};
  ParamValues half = {Rational(1, 18), Rational(1, 14), Rational(1, 16), Rational()};
  BigFloat err1 = (oracle::series_value(series, v, prec) -
                   gamma_ratio_numeric(d.rhs_factors, v, prec)).abs();
  BigFloat err2 = (oracle::series_value(series, half, prec) -
                   gamma_ratio_numeric(d.rhs_factors, half, prec)).abs();
  BigFloat lhs = err1;
  BigFloat rhs = err2;
  rhs.mul_ui(1u << n);  // 2^N
  rhs.div_ui(4);
  CHECK(lhs > rhs);  // gap shrank by at least 2^N up to a factor of 4
}
