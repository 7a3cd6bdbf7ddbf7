#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulerforge/catalog.hpp"
#include "eulerforge/verifier.hpp"
#include "support/oracles.hpp"

using namespace eulerforge;

namespace {

Identity make_identity(const char* id, WeightFamily w, int denom, const char* poly,
                       const char* rhs) {
  Identity identity;
  identity.id = id;
  identity.lhs = SumExpression{w, denom, parse_harmonic_expr(poly)};
  identity.rhs = parse_zeta_expr(rhs);
  identity.provenance = ExtractionProvenance{"test", Monomial()};
  return identity;
}

}  // namespace

TEST_CASE("incremental weights match the exact values") {
  WeightSequence w1(WeightFamily::w1, 192);
  w1.advance();
  CHECK(w1.value() == BigFloat::of(0.5, 192));
  w1.advance();
  CHECK(w1.value() == BigFloat::of(0.375, 192));

  WeightSequence w3(WeightFamily::w3, 192);
  for (int i = 0; i < 3; ++i) w3.advance();
  CHECK((w3.value() - BigFloat::of(Rational(27, 20), 192)).abs() <
        BigFloat::two_to(-185, 64));

  // recurrences vs exact rationals through k = 50
  WeightSequence a(WeightFamily::w1, 256), b(WeightFamily::w2, 256), c(WeightFamily::w3, 256);
  for (unsigned k = 1; k <= 50; ++k) {
    a.advance();
    b.advance();
    c.advance();
    Integer four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    Integer two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
    Integer three_k;
    mpz_ui_pow_ui(three_k.get_mpz_t(), 3, k);
    Rational w1_exact(central_binomial_integer(k), four_k);
    Rational w2_exact(Integer(1), two_k);
    Rational w3_exact(three_k, central_binomial_integer(k));
    CHECK((a.value() - BigFloat::of(w1_exact, 256)).abs() < BigFloat::two_to(-240, 64));
    CHECK(b.value() == BigFloat::of(w2_exact, 256));
    CHECK((c.value() - BigFloat::of(w3_exact, 256)).abs() < BigFloat::two_to(-240, 64));
  }
}

TEST_CASE("geometric-family verification passes quickly") {
  Identity bailey_ac = make_identity("bailey:a1c1", WeightFamily::w2, 1, "H", "1/2*zeta2");
  VerifyConfig cfg;
  cfg.max_terms_w23 = 300;
  VerifyReport report = verify(bailey_ac, cfg);
  CHECK(report.verdict == Verdict::pass);
  CHECK(report.terms_used == 300);
  CHECK_FALSE(report.tail_applied);
  // value ~ 0.8224670334...
  CHECK(report.rhs_value.substr(0, 8) == "8.224670");
  BigFloat diff = oracle::from_decimal(report.abs_diff.c_str(), 128);
  CHECK(diff < BigFloat::of(1e-20, 64));

  Identity wang_b2d =
      make_identity("wang:b2d1", WeightFamily::w3, 2, "6*O-5*Hm1", "26/3*zeta3");
  VerifyReport wang_report = verify(wang_b2d, cfg);
  CHECK(wang_report.verdict == Verdict::pass);
}

TEST_CASE("gamma in the right side is rejected") {
  Identity bad = make_identity("bad", WeightFamily::w2, 1, "H", "gamma+2*ln2");
  CHECK_THROWS_AS(verify(bad, VerifyConfig{}), std::invalid_argument);
}

TEST_CASE("tolerance finer than the precision is rejected") {
  Identity id = make_identity("x", WeightFamily::w2, 1, "H", "1/2*zeta2");
  VerifyConfig cfg;
  cfg.precision_bits = 96;
  cfg.tolerance_override = 1e-12;  // 2^-(96-64) = 2^-32 ~ 2e-10 > 1e-12
  CHECK_THROWS_AS(verify(id, cfg), std::invalid_argument);
}

TEST_CASE("central-binomial family with tail correction") {
  // sum C(2k,k) O_k / (k 4^k) = pi^2/4, k^(-3/2) log decay
  Identity gauss_ab = make_identity("gauss:a1b1", WeightFamily::w1, 1, "O", "3/2*zeta2");
  VerifyConfig cfg;
  cfg.max_terms_w1 = 100000;
  VerifyReport report = verify(gauss_ab, cfg);
  CHECK(report.verdict == Verdict::pass);
  CHECK(report.tail_applied);
  CHECK(report.lhs_value.substr(0, 9) == "2.4674011");
  BigFloat diff = oracle::from_decimal(report.abs_diff.c_str(), 128);
  CHECK(diff < BigFloat::of(1e-6, 64));

  // corrupted right side: pi^2/4 -> pi^2/3 fails by pi^2/12 ~ 0.8224670
  Identity corrupted = make_identity("gauss:a1b1:corrupt", WeightFamily::w1, 1, "O", "2*zeta2");
  VerifyReport bad = verify(corrupted, cfg);
  CHECK(bad.verdict == Verdict::fail);
  BigFloat gap = oracle::from_decimal(bad.abs_diff.c_str(), 128);
  CHECK((gap - oracle::from_decimal("0.8224670334241132", 128)).abs() <
        BigFloat::of(1e-5, 64));
}

TEST_CASE("tail estimate against the exact closed form") {
  // sum_{k>K} C(2k,k)/(k^2 4^k) = (pi^2/6 - 2 ln^2 2) - partial_K
  const long cutoff = 100000;
  const mpfr_prec_t prec = 192;
  BigFloat partial(prec + 16);
  WeightSequence w(WeightFamily::w1, prec + 16);
  for (long k = 1; k <= cutoff; ++k) {
    w.advance();
    BigFloat term = w.value();
    term.div_ui(static_cast<unsigned long>(k) * static_cast<unsigned long>(k));
    partial += term;
  }
  BigFloat closed = zetapoly_eval(parse_zeta_expr("zeta2-2*ln2^2"), prec + 16);
  BigFloat true_tail = closed - partial;

  TailEstimate tail = tail_estimate(WeightFamily::w1, parse_harmonic_expr("1"), 2, cutoff, 2, prec);
  BigFloat err = (tail.correction - true_tail).abs();
  // the relative error of the order-2 model at K = 1e5 is far below 1e-10
  CHECK(err < true_tail.abs() * BigFloat::of(1e-10, 64));
  CHECK(err < tail.bound);

  // higher order helps: order 1 correction is strictly worse
  TailEstimate tail1 = tail_estimate(WeightFamily::w1, parse_harmonic_expr("1"), 2, cutoff, 1, prec);
  CHECK((tail1.correction - true_tail).abs() > err);

  // unsupported families are refused
  CHECK_THROWS_AS(tail_estimate(WeightFamily::w2, parse_harmonic_expr("1"), 2, cutoff, 2, prec),
                  std::invalid_argument);
  CHECK_THROWS_AS(tail_estimate(WeightFamily::w1, parse_harmonic_expr("1"), 2, 100, 2, prec),
                  std::invalid_argument);
}

TEST_CASE("tail model handles harmonic polynomials") {
  // sum C(2k,k) O_k/(k^2 4^k) = (7/2) zeta3 - 3 zeta2 ln2: corrected partial
  // sums at two cutoffs agree with the closed form far beyond either cutoff's
  // raw truncation error
  const mpfr_prec_t prec = 192;
  BigFloat closed = zetapoly_eval(parse_zeta_expr("7/2*zeta3-3*zeta2*ln2"), prec);
  for (long cutoff : {20000L, 80000L}) {
    BigFloat partial(prec + 16);
    WeightSequence w(WeightFamily::w1, prec + 16);
    BigFloat o_value(prec + 16);
    for (long k = 1; k <= cutoff; ++k) {
      w.advance();
      BigFloat t = BigFloat::of(1L, prec + 16);
      t.div_ui(static_cast<unsigned long>(2 * k - 1));
      o_value += t;
      BigFloat term = w.value() * o_value;
      term.div_ui(static_cast<unsigned long>(k) * static_cast<unsigned long>(k));
      partial += term;
    }
    TailEstimate tail =
        tail_estimate(WeightFamily::w1, parse_harmonic_expr("O"), 2, cutoff, 2, prec);
    BigFloat corrected = partial + tail.correction;
    CHECK((corrected - closed).abs() < BigFloat::of(1e-12, 64));
  }
}

TEST_CASE("monotone refinement for the geometric family") {
  Identity id = make_identity("bailey:a1c1", WeightFamily::w2, 1, "H", "1/2*zeta2");
  BigFloat last(64);
  bool first = true;
  for (long terms : {60L, 120L, 240L}) {
    VerifyConfig cfg;
    cfg.max_terms_override = terms;
    cfg.tolerance_override = 1e-6;
    VerifyReport report = verify(id, cfg);
    BigFloat diff = oracle::from_decimal(report.abs_diff.c_str(), 128);
    if (!first) CHECK(diff <= last + BigFloat::two_to(-120, 64));
    last = diff;
    first = false;
  }
}

TEST_CASE("indeterminate verdict when the tail bound exceeds the tolerance") {
  Identity id = make_identity("gauss:a1b1", WeightFamily::w1, 1, "O", "3/2*zeta2");
  VerifyConfig cfg;
  cfg.max_terms_override = 1000;
  cfg.tolerance_override = 1e-30;
  VerifyReport report = verify(id, cfg);
  CHECK(report.verdict == Verdict::indeterminate);
}

TEST_CASE("verify_catalog aggregates and cross-references the allowlist") {
  CHECK(verify_catalog({}, VerifyConfig{}).reports.empty());

  Identity engine = make_identity("wang:b2d1", WeightFamily::w3, 2, "6*O-5*Hm1", "26/3*zeta3");
  Identity printed =
      make_identity("wang:b2d1:printed", WeightFamily::w3, 2, "6*O-5*Hm1", "182/3*zeta3");
  Identity broken = make_identity("broken", WeightFamily::w2, 1, "H", "gamma");

  VerifyConfig cfg;
  std::map<std::string, std::string> notes = {
      {"wang:b2d1:printed", "derived value differs from printed value"}};
  VerifyOutcome outcome = verify_catalog({engine, printed, broken}, cfg, notes);
  REQUIRE(outcome.reports.size() == 3);
  CHECK(outcome.passes == 1);
  CHECK(outcome.allowlisted_failures == 1);
  CHECK(outcome.failures == 1);

  CHECK(outcome.reports[0].verdict == Verdict::pass);
  CHECK(outcome.reports[1].verdict == Verdict::fail);
  CHECK(outcome.reports[1].allowlisted);
  // printed-vs-derived gap is 52 zeta(3) ~ 62.507
  BigFloat gap = oracle::from_decimal(outcome.reports[1].abs_diff.c_str(), 128);
  CHECK((gap - oracle::from_decimal("62.50695896429890284", 128)).abs() <
        BigFloat::of(1e-10, 64));
  CHECK(!outcome.reports[2].error.empty());
}
