#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulerforge/catalog.hpp"
#include "eulerforge/extraction.hpp"
#include "support/oracles.hpp"

using namespace eulerforge;

namespace {

HarmonicPoly hp(const char* expr) { return parse_harmonic_expr(expr); }
ZetaPoly zp(const char* expr) { return parse_zeta_expr(expr); }
Monomial mono(const char* s) { return Monomial::parse(s); }

const Identity& find_id(const std::vector<Identity>& ids, const std::string& id) {
  for (const auto& identity : ids)
    if (identity.id == id) return identity;
  throw std::runtime_error("missing identity " + id);
}

}  // namespace

TEST_CASE("expand_lhs raw coefficients") {
  auto gauss = expand_lhs(descriptor("gauss"), 3);
  REQUIRE(gauss.count(mono("a1b1")) == 1);
  CHECK(gauss.at(mono("a1b1")).poly == hp("2*O"));
  CHECK(gauss.at(mono("a1b1")).weight == WeightFamily::w1);
  CHECK(gauss.at(mono("a1b1")).denom_exponent == 1);
  // prefactor b divides everything: no pure-a monomial
  CHECK(gauss.count(mono("a1")) == 0);
  CHECK(gauss.count(mono("a2")) == 0);
  CHECK(gauss.count(mono("b1")) == 1);
  CHECK(gauss.at(mono("b1")).poly == hp("1"));

  auto wang = expand_lhs(descriptor("wang"), 3);
  REQUIRE(wang.count(mono("b2d1")) == 1);
  CHECK(wang.at(mono("b2d1")).poly == hp("5/9*Hm1-2/3*O"));
  CHECK(wang.at(mono("b2d1")).denom_exponent == 2);
  CHECK(wang.count(mono("b1")) == 0);  // prefactor bd
}

TEST_CASE("expand_rhs delegates to the gamma expander") {
  auto gauss = expand_rhs(descriptor("gauss"), 3);
  CHECK(gauss.coeff(Monomial()) == ZetaPoly(Rational(1)));
  CHECK(gauss.coeff(mono("a1b1")) == zp("3*zeta2"));
  auto wang = expand_rhs(descriptor("wang"), 3);
  CHECK(wang.coeff(mono("b1d1")) == zp("8/9*zeta2"));
}

TEST_CASE("extraction normalizes to the printed forms") {
  auto gauss = extract_identities(descriptor("gauss"), 3);
  const auto& ab = find_id(gauss, "gauss:a1b1");
  CHECK(ab.lhs.poly == hp("O"));
  CHECK(ab.lhs.denom_exponent == 1);
  CHECK(ab.rhs == zp("3/2*zeta2"));
  CHECK(std::get<ExtractionProvenance>(ab.provenance).theorem == "gauss");

  const auto& b = find_id(gauss, "gauss:b1");
  CHECK(b.lhs.poly == hp("1"));
  CHECK(b.rhs == zp("2*ln2"));

  const auto& bc = find_id(gauss, "gauss:b1c1");
  CHECK(bc.lhs.poly == hp("H"));
  CHECK(bc.rhs == zp("2*zeta2"));

  const auto& abc = find_id(gauss, "gauss:a1b1c1");
  CHECK(abc.lhs.poly == hp("H*O"));
  CHECK(abc.rhs == zp("7*zeta3"));

  auto bailey = extract_identities(descriptor("bailey"), 2);
  const auto& ac = find_id(bailey, "bailey:a1c1");
  CHECK(ac.lhs.poly == hp("H"));
  CHECK(ac.rhs == zp("1/2*zeta2"));

  auto wang = extract_identities(descriptor("wang"), 3);
  const auto& b2d = find_id(wang, "wang:b2d1");
  CHECK(b2d.lhs.poly == hp("6*O-5*Hm1"));
  CHECK(b2d.lhs.denom_exponent == 2);
  CHECK(b2d.rhs == zp("26/3*zeta3"));
}

TEST_CASE("per-k coefficient oracle against literal summands") {
  const int cap = 3;
  for (const auto* d : all_descriptors()) {
    auto lhs = expand_lhs(*d, cap);
    for (long k = 1; k <= 10; ++k) {
      oracle::TestPoly literal = oracle::literal_summand(*d, k, cap);
      for (const auto& [m, expr] : lhs) {
        std::array<int, 4> e = {m.exponent(ParamVar::a), m.exponent(ParamVar::b),
                                m.exponent(ParamVar::c), m.exponent(ParamVar::d)};
        CHECK(hpoly_eval(expr.poly, k) == literal.coeff(e));
      }
      for (const auto& [e, c] : literal.terms) {
        Monomial m = Monomial::var(ParamVar::a, e[0]) * Monomial::var(ParamVar::b, e[1]) *
                     Monomial::var(ParamVar::c, e[2]) * Monomial::var(ParamVar::d, e[3]);
        REQUIRE(lhs.count(m) == 1);
        CHECK(hpoly_eval(lhs.at(m).poly, k) == c);
      }
    }
  }
}

TEST_CASE("gamma cancellation across every extraction") {
  for (const auto* d : all_descriptors())
    for (const auto& identity : extract_identities(*d, 6))
      CHECK_FALSE(identity.rhs.depends_on_gamma());
}

TEST_CASE("descriptor inconsistency aborts loudly") {
  // corrupt Gauss: drop one left-side factor so the sides disagree
  TheoremDescriptor broken = descriptor("gauss");
  broken.lhs_factors.pop_back();
  CHECK_THROWS_AS(extract_identities(broken, 3), std::logic_error);
}

TEST_CASE("combine basics") {
  auto gauss = extract_identities(descriptor("gauss"), 3);
  const auto& bc = find_id(gauss, "gauss:b1c1");
  const auto& b2 = find_id(gauss, "gauss:b2");

  // X - X = 0
  Identity zero = combine({{&bc, Rational(1)}, {&bc, Rational(-1)}}, true);
  CHECK(zero.lhs.poly.is_zero());
  CHECK(zero.rhs.is_zero());

  // [bc] - [b^2] with simplify: sum over k^2 with unit polynomial
  Identity k2 = combine({{&bc, Rational(1)}, {&b2, Rational(-1)}}, true, "sum-over-k2");
  CHECK(k2.lhs.poly == hp("1"));
  CHECK(k2.lhs.denom_exponent == 2);
  CHECK(k2.lhs.weight == WeightFamily::w1);
  CHECK(k2.rhs == zp("zeta2-2*ln2^2"));
  const auto& prov = std::get<CombinationProvenance>(k2.provenance);
  CHECK(prov.parents.size() == 2);
  CHECK(prov.simplified);
  CHECK(prov.tag == "sum-over-k2");

  // [abc] - [ab^2] with simplify: the odd-harmonic sum over k^2
  const auto& abc = find_id(gauss, "gauss:a1b1c1");
  const auto& ab2 = find_id(gauss, "gauss:a1b2");
  CHECK(ab2.lhs.poly == hp("Hm1*O"));
  CHECK(ab2.rhs == zp("7/2*zeta3+3*zeta2*ln2"));
  Identity ok2 = combine({{&abc, Rational(1)}, {&ab2, Rational(-1)}}, true);
  CHECK(ok2.lhs.poly == hp("O"));
  CHECK(ok2.lhs.denom_exponent == 2);
  CHECK(ok2.rhs == zp("7/2*zeta3-3*zeta2*ln2"));

  // without simplify the shifted symbol stays
  Identity raw = combine({{&abc, Rational(1)}, {&ab2, Rational(-1)}}, false);
  CHECK(raw.lhs.poly == hp("H*O-Hm1*O"));
  CHECK(raw.lhs.denom_exponent == 1);

  // single parent, coefficient 1: clone with combination provenance
  Identity clone = combine({{&abc, Rational(1)}}, false);
  CHECK(clone.lhs.poly == abc.lhs.poly);
  CHECK(clone.rhs == abc.rhs);
  CHECK(std::holds_alternative<CombinationProvenance>(clone.provenance));

  // mixed weight families are rejected
  auto bailey = extract_identities(descriptor("bailey"), 2);
  const auto& ac = find_id(bailey, "bailey:a1c1");
  CHECK_THROWS_AS(combine({{&abc, Rational(1)}, {&ac, Rational(1)}}, false),
                  std::invalid_argument);
}

TEST_CASE("combination ids are stable") {
  CHECK(combination_id({{"gauss:a1b1c1", Rational(1)}, {"gauss:a1b2", Rational(-1)}}, true) ==
        combination_id({{"gauss:a1b1c1", Rational(1)}, {"gauss:a1b2", Rational(-1)}}, true));
  CHECK(combination_id({{"x", Rational(1)}}, true) != combination_id({{"x", Rational(1)}}, false));
  CHECK(combination_id({{"x", Rational(1)}}, true).rfind("combo:", 0) == 0);
}

TEST_CASE("canonical comparison bridges printed and raw forms") {
  // bailey [a3]: printed sum of H_{k-1}^(2) equals the raw extraction
  auto bailey = extract_identities(descriptor("bailey"), 3);
  const auto& a3 = find_id(bailey, "bailey:a3");
  CanonicalIdentity engine = canonical_form(a3);
  CanonicalIdentity printed = canonical_form(
      WeightFamily::w2, 1, hp("Hm1_2"), zp("-1/4*zeta3+1/2*zeta2*ln2-1/6*ln2^3"));
  CHECK(engine == printed);

  // bailey [a2c]: printed form lives over k^2
  auto bailey4 = extract_identities(descriptor("bailey"), 3);
  const auto& a2c = find_id(bailey4, "bailey:a2c1");
  CanonicalIdentity engine2 = canonical_form(a2c);
  CanonicalIdentity printed2 =
      canonical_form(WeightFamily::w2, 2, hp("H"), zp("zeta3-1/2*zeta2*ln2"));
  CHECK(engine2 == printed2);
}
