#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eulerforge/extraction.hpp"
#include "eulerforge/verifier.hpp"

namespace eulerforge {

/// On-disk identity catalog. Serialization is deterministic and round-trips
/// bit-exactly; identity ids must be unique.
struct CatalogFile {
  int format_version = 1;
  std::vector<Identity> identities;
  std::vector<VerifyReport> reports;  // optional, embedded verification results

  const Identity* find(const std::string& id) const;
};

std::string catalog_to_json(const CatalogFile& catalog);
CatalogFile catalog_from_json(const std::string& text);
CatalogFile load_catalog(const std::string& path);
void save_catalog(const CatalogFile& catalog, const std::string& path);

std::string reports_to_json(const std::vector<VerifyReport>& reports);
void save_reports(const std::vector<VerifyReport>& reports, const std::string& path);

// --------------------------------------------------------------------------
// expression parsing for data files and tests
//
// Compact linear syntax: terms joined by +/-, each term an optional rational
// coefficient and '*'-separated symbol powers, e.g. "6*O-5*Hm1",
// "H^2-3*H2", "45/8*zeta4-7*zeta3*ln2". "1" denotes the constant term.

HarmonicPoly parse_harmonic_expr(const std::string& text);
ZetaPoly parse_zeta_expr(const std::string& text);

// --------------------------------------------------------------------------
// discrepancy allowlist

/// One documented printed-vs-derived discrepancy. Extraction entries match by
/// (theorem, monomial); combination entries match by their parent list.
struct AllowlistEntry {
  std::string name;
  std::string theorem;   // extraction match (empty for combinations)
  std::string monomial;
  std::vector<std::pair<std::string, Rational>> parents;  // combination match
  ZetaPoly printed_rhs;
  ZetaPoly derived_rhs;
  std::string note;
};

struct Allowlist {
  std::vector<AllowlistEntry> entries;
  const AllowlistEntry* match(const Identity& identity) const;
};

Allowlist load_allowlist(const std::string& path);

// --------------------------------------------------------------------------
// regression corpus and combination specs

struct CorpusExtraction {
  std::string theorem;
  Monomial monomial;
  int denom_exponent = 1;
  HarmonicPoly printed_poly;
  ZetaPoly printed_rhs;
};

struct CombinationRequest {
  std::string tag;
  std::vector<std::pair<std::string, Rational>> parents;
  bool simplify = true;
};

struct CorpusCombination {
  CombinationRequest request;
  ZetaPoly printed_rhs;
};

struct Corpus {
  std::vector<CorpusExtraction> extractions;
  std::vector<CorpusCombination> combinations;
};

Corpus load_corpus(const std::string& path);
std::vector<CombinationRequest> load_combination_spec(const std::string& path);

/// Executes a combination spec against the catalog and appends the results.
/// Unknown parent ids throw std::invalid_argument.
void apply_combinations(CatalogFile& catalog, const std::vector<CombinationRequest>& requests);

// --------------------------------------------------------------------------
// canonical comparison of printed vs engine identities
//
// Printed identities may use index-shifted symbols where the raw extraction
// has an equivalent polynomial; comparing canonical forms (shift-rewritten,
// common 1/k powers folded, content/sign normalized) decides equality.

struct CanonicalIdentity {
  WeightFamily weight = WeightFamily::w1;
  int denom_exponent = 1;
  HarmonicPoly poly;
  ZetaPoly rhs;

  friend bool operator==(const CanonicalIdentity&, const CanonicalIdentity&) = default;
};

CanonicalIdentity canonical_form(WeightFamily weight, int denom_exponent, HarmonicPoly poly,
                                 ZetaPoly rhs);
CanonicalIdentity canonical_form(const Identity& identity);

// --------------------------------------------------------------------------
// rendering

/// Plain-text left side, e.g. "Σ_k C(2k,k)·O_k/(k·4^k)".
std::string sum_text(const SumExpression& expr);
/// One-line plain-text identity, right side optionally in pi form.
std::string identity_text(const Identity& identity, bool pi_form);
/// Display equation, e.g.
/// "\sum_{k=1}^\infty \frac{\binom{2k}{k}O_k}{k\,2^{2k}} = \frac{\pi^2}{4}".
std::string identity_latex(const Identity& identity, bool pi_form);
/// Whole-catalog LaTeX export; combination identities carry a provenance
/// comment line. Empty catalog yields an empty document.
std::string export_latex(const CatalogFile& catalog, bool pi_form);

}  // namespace eulerforge
