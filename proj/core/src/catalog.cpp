#include "eulerforge/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace eulerforge {

using json = nlohmann::ordered_json;

const Identity* CatalogFile::find(const std::string& id) const {
  for (const auto& identity : identities)
    if (identity.id == id) return &identity;
  return nullptr;
}

// ---------------------------------------------------------------------------
// json helpers

namespace {

json hpoly_to_json(const HarmonicPoly& poly) {
  json arr = json::array();
  for (const auto& [mono, coeff] : poly.terms()) {
    json term;
    term["coefficient"] = coeff.str();
    json symbols = json::object();
    for (const auto& [sym, e] : mono.factors()) symbols[sym.name()] = e;
    term["symbols"] = std::move(symbols);
    arr.push_back(std::move(term));
  }
  return arr;
}

HarmonicPoly hpoly_from_json(const json& arr) {
  HarmonicPoly poly;
  for (const auto& term : arr) {
    Rational coeff = Rational::parse(term.at("coefficient").get<std::string>());
    HarmonicMonomial mono;
    for (const auto& [name, power] : term.at("symbols").items())
      mono = mono * HarmonicMonomial::symbol(HarmonicSymbol::parse(name), power.get<int>());
    poly += HarmonicPoly::term(coeff, mono);
  }
  return poly;
}

json zetapoly_to_json(const ZetaPoly& poly) {
  json arr = json::array();
  for (const auto& [mono, coeff] : poly.terms()) {
    json term;
    term["coefficient"] = coeff.str();
    json symbols = json::object();
    for (const auto& [sym, e] : mono.factors()) symbols[sym.name()] = e;
    term["symbols"] = std::move(symbols);
    arr.push_back(std::move(term));
  }
  return arr;
}

ZetaPoly zetapoly_from_json(const json& arr) {
  ZetaPoly poly;
  for (const auto& term : arr) {
    Rational coeff = Rational::parse(term.at("coefficient").get<std::string>());
    ConstMonomial mono;
    for (const auto& [name, power] : term.at("symbols").items())
      mono = mono * ConstMonomial::symbol(ConstSymbol::parse(name), power.get<int>());
    poly += ZetaPoly::term(coeff, mono);
  }
  return poly;
}

json provenance_to_json(const Provenance& prov) {
  json out;
  if (const auto* e = std::get_if<ExtractionProvenance>(&prov)) {
    out["type"] = "extraction";
    out["theorem"] = e->theorem;
    out["monomial"] = e->monomial.str();
  } else {
    const auto& c = std::get<CombinationProvenance>(prov);
    out["type"] = "combination";
    out["simplified"] = c.simplified;
    out["tag"] = c.tag;
    json parents = json::array();
    for (const auto& [id, coeff] : c.parents)
      parents.push_back(json{{"id", id}, {"coeff", coeff.str()}});
    out["parents"] = std::move(parents);
  }
  return out;
}

Provenance provenance_from_json(const json& in) {
  std::string type = in.at("type").get<std::string>();
  if (type == "extraction") {
    ExtractionProvenance e;
    e.theorem = in.at("theorem").get<std::string>();
    e.monomial = Monomial::parse(in.at("monomial").get<std::string>());
    return e;
  }
  if (type != "combination")
    throw std::invalid_argument("catalog: unknown provenance type '" + type + "'");
  CombinationProvenance c;
  c.simplified = in.at("simplified").get<bool>();
  c.tag = in.value("tag", "");
  for (const auto& p : in.at("parents"))
    c.parents.emplace_back(p.at("id").get<std::string>(),
                           Rational::parse(p.at("coeff").get<std::string>()));
  return c;
}

json status_to_json(const IdentityStatus& status) {
  json out;
  switch (status.state) {
    case IdentityStatus::State::unverified: out["state"] = "unverified"; break;
    case IdentityStatus::State::verified:
      out["state"] = "verified";
      out["precision"] = status.detail;
      break;
    case IdentityStatus::State::failed:
      out["state"] = "failed";
      out["diff"] = status.detail;
      break;
  }
  return out;
}

IdentityStatus status_from_json(const json& in) {
  IdentityStatus status;
  std::string state = in.at("state").get<std::string>();
  if (state == "unverified") {
    status.state = IdentityStatus::State::unverified;
  } else if (state == "verified") {
    status.state = IdentityStatus::State::verified;
    status.detail = in.value("precision", "");
  } else if (state == "failed") {
    status.state = IdentityStatus::State::failed;
    status.detail = in.value("diff", "");
  } else {
    throw std::invalid_argument("catalog: unknown status '" + state + "'");
  }
  return status;
}

json identity_to_json(const Identity& identity) {
  json out;
  out["id"] = identity.id;
  if (const auto* e = std::get_if<ExtractionProvenance>(&identity.provenance)) {
    out["theorem"] = e->theorem;
    out["monomial"] = e->monomial.str();
  } else {
    out["theorem"] = "";
    out["monomial"] = "";
  }
  out["weight"] = weight_name(identity.lhs.weight);
  out["denom_exponent"] = identity.lhs.denom_exponent;
  out["hpoly"] = hpoly_to_json(identity.lhs.poly);
  out["rhs"] = zetapoly_to_json(identity.rhs);
  out["provenance"] = provenance_to_json(identity.provenance);
  out["status"] = status_to_json(identity.status);
  return out;
}

Identity identity_from_json(const json& in) {
  Identity identity;
  identity.id = in.at("id").get<std::string>();
  identity.lhs.weight = parse_weight(in.at("weight").get<std::string>());
  identity.lhs.denom_exponent = in.at("denom_exponent").get<int>();
  identity.lhs.poly = hpoly_from_json(in.at("hpoly"));
  identity.rhs = zetapoly_from_json(in.at("rhs"));
  identity.provenance = provenance_from_json(in.at("provenance"));
  identity.status = status_from_json(in.at("status"));
  return identity;
}

json report_to_json(const VerifyReport& report) {
  json out;
  out["id"] = report.id;
  out["verdict"] = verdict_name(report.verdict);
  out["lhs_value"] = report.lhs_value;
  out["rhs_value"] = report.rhs_value;
  out["abs_diff"] = report.abs_diff;
  out["terms_used"] = report.terms_used;
  out["tail_applied"] = report.tail_applied;
  out["tail_correction"] = report.tail_correction;
  out["tail_bound"] = report.tail_bound;
  out["error"] = report.error;
  out["allowlisted"] = report.allowlisted;
  out["allowlist_note"] = report.allowlist_note;
  return out;
}

VerifyReport report_from_json(const json& in) {
  VerifyReport report;
  report.id = in.at("id").get<std::string>();
  std::string verdict = in.at("verdict").get<std::string>();
  if (verdict == "pass") report.verdict = Verdict::pass;
  else if (verdict == "fail") report.verdict = Verdict::fail;
  else if (verdict == "indeterminate") report.verdict = Verdict::indeterminate;
  else throw std::invalid_argument("catalog: unknown verdict '" + verdict + "'");
  report.lhs_value = in.value("lhs_value", "");
  report.rhs_value = in.value("rhs_value", "");
  report.abs_diff = in.value("abs_diff", "");
  report.terms_used = in.value("terms_used", 0L);
  report.tail_applied = in.value("tail_applied", false);
  report.tail_correction = in.value("tail_correction", "");
  report.tail_bound = in.value("tail_bound", "");
  report.error = in.value("error", "");
  report.allowlisted = in.value("allowlisted", false);
  report.allowlist_note = in.value("allowlist_note", "");
  return report;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

json parse_json(const std::string& text, const std::string& what) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) throw std::invalid_argument("malformed " + what + " JSON");
  return parsed;
}

}  // namespace

std::string catalog_to_json(const CatalogFile& catalog) {
  json out;
  out["format_version"] = catalog.format_version;
  json ids = json::array();
  for (const auto& identity : catalog.identities) ids.push_back(identity_to_json(identity));
  out["identities"] = std::move(ids);
  if (!catalog.reports.empty()) {
    json reports = json::array();
    for (const auto& report : catalog.reports) reports.push_back(report_to_json(report));
    out["reports"] = std::move(reports);
  }
  return out.dump(2) + "\n";
}

CatalogFile catalog_from_json(const std::string& text) {
  json in = parse_json(text, "catalog");
  CatalogFile catalog;
  try {
    catalog.format_version = in.at("format_version").get<int>();
    for (const auto& item : in.at("identities")) {
      Identity identity = identity_from_json(item);
      if (catalog.find(identity.id) != nullptr)
        throw std::invalid_argument("catalog: duplicate identity id '" + identity.id + "'");
      catalog.identities.push_back(std::move(identity));
    }
    if (in.contains("reports"))
      for (const auto& item : in.at("reports")) catalog.reports.push_back(report_from_json(item));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed catalog: ") + e.what());
  }
  return catalog;
}

CatalogFile load_catalog(const std::string& path) { return catalog_from_json(read_file(path)); }

void save_catalog(const CatalogFile& catalog, const std::string& path) {
  write_file(path, catalog_to_json(catalog));
}

std::string reports_to_json(const std::vector<VerifyReport>& reports) {
  json arr = json::array();
  for (const auto& report : reports) arr.push_back(report_to_json(report));
  return arr.dump(2) + "\n";
}

void save_reports(const std::vector<VerifyReport>& reports, const std::string& path) {
  write_file(path, reports_to_json(reports));
}

// ---------------------------------------------------------------------------
// expression parsing

namespace {

struct ExprTerm {
  Rational coeff = Rational(1);
  std::vector<std::pair<std::string, int>> symbols;
};

std::vector<ExprTerm> parse_expr_terms(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty expression");

  std::vector<ExprTerm> terms;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
    std::string chunk = s.substr(start, i - start);
    if (chunk.empty()) throw std::invalid_argument("malformed expression '" + text + "'");

    ExprTerm term;
    term.coeff = Rational(sign);
    size_t pos = 0;
    while (pos < chunk.size()) {
      size_t star = chunk.find('*', pos);
      std::string token = chunk.substr(pos, star == std::string::npos ? std::string::npos
                                                                      : star - pos);
      pos = star == std::string::npos ? chunk.size() : star + 1;
      if (token.empty()) throw std::invalid_argument("malformed expression '" + text + "'");
      if (std::isdigit(static_cast<unsigned char>(token[0]))) {
        term.coeff *= Rational::parse(token);
      } else {
        int power = 1;
        auto caret = token.find('^');
        if (caret != std::string::npos) {
          power = std::stoi(token.substr(caret + 1));
          token = token.substr(0, caret);
        }
        if (power < 1) throw std::invalid_argument("bad power in expression '" + text + "'");
        term.symbols.emplace_back(token, power);
      }
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace

HarmonicPoly parse_harmonic_expr(const std::string& text) {
  HarmonicPoly poly;
  for (const auto& term : parse_expr_terms(text)) {
    HarmonicMonomial mono;
    for (const auto& [name, power] : term.symbols)
      mono = mono * HarmonicMonomial::symbol(HarmonicSymbol::parse(name), power);
    poly += HarmonicPoly::term(term.coeff, mono);
  }
  return poly;
}

ZetaPoly parse_zeta_expr(const std::string& text) {
  ZetaPoly poly;
  for (const auto& term : parse_expr_terms(text)) {
    ConstMonomial mono;
    for (const auto& [name, power] : term.symbols)
      mono = mono * ConstMonomial::symbol(ConstSymbol::parse(name), power);
    poly += ZetaPoly::term(term.coeff, mono);
  }
  return poly;
}

// ---------------------------------------------------------------------------
// allowlist

namespace {

std::vector<std::pair<std::string, Rational>> parents_from_json(const json& arr) {
  std::vector<std::pair<std::string, Rational>> parents;
  for (const auto& p : arr) {
    if (p.is_array())
      parents.emplace_back(p.at(0).get<std::string>(), Rational::parse(p.at(1).get<std::string>()));
    else
      parents.emplace_back(p.at("id").get<std::string>(),
                           Rational::parse(p.at("coeff").get<std::string>()));
  }
  return parents;
}

bool same_parent_multiset(const std::vector<std::pair<std::string, Rational>>& x,
                          std::vector<std::pair<std::string, Rational>> y) {
  if (x.size() != y.size()) return false;
  for (const auto& px : x) {
    auto it = std::find(y.begin(), y.end(), px);
    if (it == y.end()) return false;
    y.erase(it);
  }
  return true;
}

}  // namespace

const AllowlistEntry* Allowlist::match(const Identity& identity) const {
  for (const auto& entry : entries) {
    if (const auto* e = std::get_if<ExtractionProvenance>(&identity.provenance)) {
      if (!entry.theorem.empty() && entry.theorem == e->theorem &&
          entry.monomial == e->monomial.str())
        return &entry;
    } else if (const auto* c = std::get_if<CombinationProvenance>(&identity.provenance)) {
      if (!entry.parents.empty() && same_parent_multiset(entry.parents, c->parents)) return &entry;
    }
  }
  return nullptr;
}

Allowlist load_allowlist(const std::string& path) {
  json in = parse_json(read_file(path), "allowlist");
  Allowlist allowlist;
  try {
    for (const auto& item : in.at("entries")) {
      AllowlistEntry entry;
      entry.name = item.at("name").get<std::string>();
      entry.theorem = item.value("theorem", "");
      entry.monomial = item.value("monomial", "");
      if (item.contains("parents")) entry.parents = parents_from_json(item.at("parents"));
      entry.printed_rhs = parse_zeta_expr(item.at("printed_rhs").get<std::string>());
      entry.derived_rhs = parse_zeta_expr(item.at("derived_rhs").get<std::string>());
      entry.note = item.value("note", "");
      allowlist.entries.push_back(std::move(entry));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed allowlist: ") + e.what());
  }
  return allowlist;
}

// ---------------------------------------------------------------------------
// corpus and combination specs

Corpus load_corpus(const std::string& path) {
  json in = parse_json(read_file(path), "corpus");
  Corpus corpus;
  try {
    for (const auto& item : in.at("extractions")) {
      CorpusExtraction entry;
      entry.theorem = item.at("theorem").get<std::string>();
      entry.monomial = Monomial::parse(item.at("monomial").get<std::string>());
      entry.denom_exponent = item.at("denom_exponent").get<int>();
      entry.printed_poly = parse_harmonic_expr(item.at("poly").get<std::string>());
      entry.printed_rhs = parse_zeta_expr(item.at("rhs").get<std::string>());
      corpus.extractions.push_back(std::move(entry));
    }
    if (in.contains("combinations")) {
      for (const auto& item : in.at("combinations")) {
        CorpusCombination entry;
        entry.request.tag = item.at("tag").get<std::string>();
        entry.request.parents = parents_from_json(item.at("parents"));
        entry.request.simplify = item.value("simplify", true);
        entry.printed_rhs = parse_zeta_expr(item.at("printed_rhs").get<std::string>());
        corpus.combinations.push_back(std::move(entry));
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed corpus: ") + e.what());
  }
  return corpus;
}

std::vector<CombinationRequest> load_combination_spec(const std::string& path) {
  json in = parse_json(read_file(path), "combination spec");
  std::vector<CombinationRequest> requests;
  try {
    for (const auto& item : in.at("combinations")) {
      CombinationRequest request;
      request.tag = item.value("tag", "");
      request.parents = parents_from_json(item.at("parents"));
      request.simplify = item.value("simplify", true);
      requests.push_back(std::move(request));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed combination spec: ") + e.what());
  }
  return requests;
}

void apply_combinations(CatalogFile& catalog, const std::vector<CombinationRequest>& requests) {
  for (const auto& request : requests) {
    std::vector<std::pair<const Identity*, Rational>> parents;
    for (const auto& [id, coeff] : request.parents) {
      const Identity* parent = catalog.find(id);
      if (parent == nullptr)
        throw std::invalid_argument("combination '" + request.tag + "': unknown parent id '" +
                                    id + "'");
      parents.emplace_back(parent, coeff);
    }
    Identity combined = combine(parents, request.simplify, request.tag);
    if (catalog.find(combined.id) != nullptr) continue;  // idempotent re-run
    catalog.identities.push_back(std::move(combined));
  }
}

// ---------------------------------------------------------------------------
// canonical comparison

CanonicalIdentity canonical_form(WeightFamily weight, int denom_exponent, HarmonicPoly poly,
                                 ZetaPoly rhs) {
  SumExpression expr{weight, denom_exponent, hpoly_shift_rewrite(poly)};
  canonicalize(expr, rhs);
  return {expr.weight, expr.denom_exponent, std::move(expr.poly), std::move(rhs)};
}

CanonicalIdentity canonical_form(const Identity& identity) {
  return canonical_form(identity.lhs.weight, identity.lhs.denom_exponent, identity.lhs.poly,
                        identity.rhs);
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string plain_harmonic_symbol(HarmonicSymbol s, int e) {
  if (s.is_kinv()) return e == 1 ? "1/k" : "1/k^" + std::to_string(e);
  std::string base = s.family() == HarmonicSymbol::Family::h ? "H" : "O";
  base += s.shifted() ? "_{k-1}" : "_k";
  if (s.order() > 1) base += "^(" + std::to_string(s.order()) + ")";
  if (e > 1) base += "^" + std::to_string(e);
  return base;
}

std::string plain_poly(const HarmonicPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : poly.terms()) {
    Rational mag = coeff.abs();
    if (out.empty()) {
      if (coeff.sign() < 0) out += "-";
    } else {
      out += coeff.sign() < 0 ? " - " : " + ";
    }
    std::string symbols;
    for (const auto& [sym, e] : mono.factors()) {
      if (!symbols.empty()) symbols += "\u00b7";
      symbols += plain_harmonic_symbol(sym, e);
    }
    std::string body;
    std::string num = mag.num().get_str();
    if (symbols.empty()) body = num;
    else body = (num == "1" ? "" : num + "\u00b7") + symbols;
    if (mag.den() != 1) body += "/" + mag.den().get_str();
    out += body;
  }
  return out;
}

std::string latex_harmonic_symbol(HarmonicSymbol s, int e) {
  if (s.is_kinv()) return e == 1 ? "k^{-1}" : "k^{-" + std::to_string(e) + "}";
  std::string base = s.family() == HarmonicSymbol::Family::h ? "H" : "O";
  base += s.shifted() ? "_{k-1}" : "_k";
  if (s.order() > 1) base += "^{(" + std::to_string(s.order()) + ")}";
  if (e > 1) {
    if (s.order() > 1) base = "\\left(" + base + "\\right)^" + std::to_string(e);
    else base += "^" + std::to_string(e);
  }
  return base;
}

std::string latex_poly(const HarmonicPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : poly.terms()) {
    Rational mag = coeff.abs();
    if (out.empty()) {
      if (coeff.sign() < 0) out += "-";
    } else {
      out += coeff.sign() < 0 ? "-" : "+";
    }
    std::string symbols;
    for (const auto& [sym, e] : mono.factors()) symbols += latex_harmonic_symbol(sym, e);
    std::string num = mag.num().get_str();
    std::string body = symbols.empty() ? num : (num == "1" ? symbols : num + symbols);
    if (mag.den() != 1) body = "\\frac{" + body + "}{" + mag.den().get_str() + "}";
    out += body;
  }
  return out;
}

}  // namespace

std::string sum_text(const SumExpression& expr) {
  std::string k_power =
      expr.denom_exponent == 1 ? "k" : "k^" + std::to_string(expr.denom_exponent);
  std::string numerator, denominator;
  switch (expr.weight) {
    case WeightFamily::w1:
      numerator = "C(2k,k)";
      denominator = k_power + "\u00b74^k";
      break;
    case WeightFamily::w2:
      numerator = "";
      denominator = k_power + "\u00b72^k";
      break;
    case WeightFamily::w3:
      numerator = "3^k";
      denominator = k_power + "\u00b7C(2k,k)";
      break;
  }
  bool trivial_poly = expr.poly == HarmonicPoly(Rational(1));
  if (!trivial_poly) {
    std::string poly = plain_poly(expr.poly);
    if (expr.poly.terms().size() > 1) poly = "(" + poly + ")";
    numerator = numerator.empty() ? poly : numerator + "\u00b7" + poly;
  }
  if (numerator.empty()) numerator = "1";
  return "\u03a3_k " + numerator + "/(" + denominator + ")";
}

std::string identity_text(const Identity& identity, bool pi_form) {
  return sum_text(identity.lhs) + " = " + render(identity.rhs, pi_form);
}

std::string identity_latex(const Identity& identity, bool pi_form) {
  const auto& expr = identity.lhs;
  std::string k_power =
      expr.denom_exponent == 1 ? "k" : "k^" + std::to_string(expr.denom_exponent);
  std::string numerator, denominator;
  switch (expr.weight) {
    case WeightFamily::w1:
      numerator = "\\binom{2k}{k}";
      denominator = k_power + "\\,2^{2k}";
      break;
    case WeightFamily::w2:
      numerator = "";
      denominator = k_power + "\\,2^k";
      break;
    case WeightFamily::w3:
      numerator = "3^k";
      denominator = k_power + "\\binom{2k}{k}";
      break;
  }
  bool trivial_poly = expr.poly == HarmonicPoly(Rational(1));
  if (!trivial_poly) {
    std::string poly = latex_poly(expr.poly);
    if (expr.poly.terms().size() > 1) poly = "\\left(" + poly + "\\right)";
    numerator += poly;
  }
  if (numerator.empty()) numerator = "1";
  return "\\sum_{k=1}^\\infty \\frac{" + numerator + "}{" + denominator + "} = " +
         render_latex(identity.rhs, pi_form);
}

std::string export_latex(const CatalogFile& catalog, bool pi_form) {
  std::string out;
  for (const auto& identity : catalog.identities) {
    if (const auto* c = std::get_if<CombinationProvenance>(&identity.provenance)) {
      out += "% derived from:";
      for (const auto& [id, coeff] : c->parents) out += " " + coeff.str() + "*" + id;
      if (!c->tag.empty()) out += "  (" + c->tag + ")";
      out += "\n";
    }
    out += "\\[\n" + identity_latex(identity, pi_form) + "\n\\]\n";
  }
  return out;
}

}  // namespace eulerforge
