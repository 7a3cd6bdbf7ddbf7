#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "eulerforge/catalog.hpp"
#include "support/oracles.hpp"

using namespace eulerforge;

namespace {

CatalogFile sample_catalog() {
  CatalogFile catalog;
  auto gauss = extract_identities(descriptor("gauss"), 3);
  auto bailey = extract_identities(descriptor("bailey"), 2);
  catalog.identities.insert(catalog.identities.end(), gauss.begin(), gauss.end());
  catalog.identities.insert(catalog.identities.end(), bailey.begin(), bailey.end());
  return catalog;
}

}  // namespace

TEST_CASE("expression parsers") {
  CHECK(parse_harmonic_expr("6*O-5*Hm1").terms().size() == 2);
  CHECK(parse_harmonic_expr("H^2-H2") ==
        parse_harmonic_expr("-1*H2+H^2"));
  CHECK(parse_harmonic_expr("1") == HarmonicPoly(Rational(1)));
  CHECK(parse_zeta_expr("7/2*zeta3+3*zeta2*ln2").terms().size() == 2);
  CHECK(parse_zeta_expr("zeta2^2").coeff(ConstMonomial::symbol(ConstSymbol::zeta(2), 2)) ==
        Rational(1));
  CHECK_THROWS_AS(parse_harmonic_expr(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_zeta_expr("zeta1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_harmonic_expr("H^0"), std::invalid_argument);
}

TEST_CASE("catalog round-trips bit-exactly") {
  CatalogFile catalog = sample_catalog();
  std::string first = catalog_to_json(catalog);
  CatalogFile reloaded = catalog_from_json(first);
  std::string second = catalog_to_json(reloaded);
  CHECK(first == second);
  REQUIRE(reloaded.identities.size() == catalog.identities.size());
  for (size_t i = 0; i < catalog.identities.size(); ++i) {
    CHECK(reloaded.identities[i].id == catalog.identities[i].id);
    CHECK(reloaded.identities[i].lhs.poly == catalog.identities[i].lhs.poly);
    CHECK(reloaded.identities[i].lhs.denom_exponent == catalog.identities[i].lhs.denom_exponent);
    CHECK(reloaded.identities[i].lhs.weight == catalog.identities[i].lhs.weight);
    CHECK(reloaded.identities[i].rhs == catalog.identities[i].rhs);
  }
}

TEST_CASE("catalog with combination provenance and reports round-trips") {
  CatalogFile catalog = sample_catalog();
  apply_combinations(catalog,
                     {{"sum-over-k2",
                       {{"gauss:b1c1", Rational(1)}, {"gauss:b2", Rational(-1)}},
                       true}});
  VerifyConfig cfg;
  cfg.max_terms_override = 200;
  cfg.tolerance_override = 1e-4;
  auto outcome = verify_catalog({catalog.identities.back()}, cfg);
  catalog.reports = outcome.reports;

  std::string first = catalog_to_json(catalog);
  CatalogFile reloaded = catalog_from_json(first);
  CHECK(catalog_to_json(reloaded) == first);
  const auto& combo = reloaded.identities.back();
  const auto& prov = std::get<CombinationProvenance>(combo.provenance);
  CHECK(prov.parents.size() == 2);
  CHECK(prov.tag == "sum-over-k2");
  REQUIRE(reloaded.reports.size() == 1);
  CHECK(reloaded.reports[0].id == combo.id);
}

TEST_CASE("malformed catalogs are rejected") {
  CHECK_THROWS_AS(catalog_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_from_json("{\"format_version\":1}"), std::invalid_argument);
  // duplicate ids
  CatalogFile catalog = sample_catalog();
  catalog.identities.push_back(catalog.identities.front());
  std::string text = catalog_to_json(catalog);
  CHECK_THROWS_AS(catalog_from_json(text), std::invalid_argument);
}

TEST_CASE("unknown combination parents are rejected") {
  CatalogFile catalog = sample_catalog();
  CHECK_THROWS_AS(
      apply_combinations(catalog, {{"bad", {{"gauss:zz", Rational(1)}}, true}}),
      std::invalid_argument);
}

TEST_CASE("latex export") {
  CatalogFile catalog = sample_catalog();
  const Identity* ab = catalog.find("gauss:a1b1");
  REQUIRE(ab != nullptr);
  CHECK(identity_latex(*ab, true) ==
        "\\sum_{k=1}^\\infty \\frac{\\binom{2k}{k}O_k}{k\\,2^{2k}} = \\frac{\\pi^2}{4}");
  const Identity* ac = catalog.find("bailey:a1c1");
  REQUIRE(ac != nullptr);
  CHECK(identity_latex(*ac, true) ==
        "\\sum_{k=1}^\\infty \\frac{H_k}{k\\,2^k} = \\frac{\\pi^2}{12}");

  CHECK(export_latex(CatalogFile{}, true).empty());

  CatalogFile with_combo = sample_catalog();
  apply_combinations(with_combo,
                     {{"k2", {{"gauss:b1c1", Rational(1)}, {"gauss:b2", Rational(-1)}}, true}});
  std::string doc = export_latex(with_combo, true);
  CHECK(doc.find("% derived from: 1*gauss:b1c1 -1*gauss:b2") != std::string::npos);
  CHECK(doc.find("\\frac{\\binom{2k}{k}}{k^2\\,2^{2k}}") != std::string::npos);
}

TEST_CASE("plain text rendering") {
  CatalogFile catalog = sample_catalog();
  const Identity* ab = catalog.find("gauss:a1b1");
  REQUIRE(ab != nullptr);
  CHECK(identity_text(*ab, true) ==
        "Σ_k C(2k,k)·O_k/(k·4^k) = π²/4");
  const Identity* a2b = catalog.find("gauss:a2b1");
  REQUIRE(a2b != nullptr);
  CHECK(sum_text(a2b->lhs) == "Σ_k C(2k,k)·(O_k^2 - O_k^(2))/(k·4^k)");
}

TEST_CASE("file save and load") {
  CatalogFile catalog = sample_catalog();
  std::string path = "test_catalog_tmp.json";
  save_catalog(catalog, path);
  CatalogFile reloaded = load_catalog(path);
  CHECK(catalog_to_json(reloaded) == catalog_to_json(catalog));
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_catalog("does/not/exist.json"), std::runtime_error);
  CHECK_THROWS_AS(save_catalog(catalog, "no/such/dir/x.json"), std::runtime_error);
}
