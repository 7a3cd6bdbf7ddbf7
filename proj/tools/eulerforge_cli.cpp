// eulerforge command-line front end: generate identity catalogs from the four
// summation theorems, verify them numerically, derive linear combinations,
// and export LaTeX/JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eulerforge/eulerforge.hpp"

namespace {

using namespace eulerforge;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kMaxFailureExit = 100;

mpfr_prec_t default_precision_bits() {
  if (const char* env = std::getenv("EULERFORGE_PRECISION_BITS")) {
    long bits = std::strtol(env, nullptr, 10);
    if (bits >= 64) return static_cast<mpfr_prec_t>(bits);
    std::cerr << "warning: ignoring EULERFORGE_PRECISION_BITS=" << env << " (must be >= 64)\n";
  }
  return 192;
}

int run_generate(const std::string& theorem, int degree, const std::string& out, bool pi_form) {
  std::vector<std::string> names;
  if (theorem == "all")
    names = {"gauss", "watson", "bailey", "wang"};
  else
    names = {theorem};

  CatalogFile catalog;
  for (const auto& name : names) {
    const TheoremDescriptor& d = descriptor(name);  // throws on bad name
    auto identities = extract_identities(d, degree);
    std::cout << name << ": " << identities.size() << " identities at degree " << degree << "\n";
    for (const auto& identity : identities) {
      const auto& prov = std::get<ExtractionProvenance>(identity.provenance);
      std::cout << "  [" << prov.monomial.str() << "]  " << identity_text(identity, pi_form)
                << "\n";
    }
    catalog.identities.insert(catalog.identities.end(), identities.begin(), identities.end());
  }
  save_catalog(catalog, out);
  std::cout << "wrote " << catalog.identities.size() << " identities to " << out << "\n";
  return kExitOk;
}

int run_verify(const std::string& catalog_path, const std::string& allowlist_path,
               const std::string& report_path, bool update_catalog, VerifyConfig cfg) {
  CatalogFile catalog = load_catalog(catalog_path);

  std::map<std::string, std::string> notes;
  if (!allowlist_path.empty()) {
    Allowlist allowlist = load_allowlist(allowlist_path);
    for (const auto& identity : catalog.identities)
      if (const AllowlistEntry* entry = allowlist.match(identity))
        notes[identity.id] = entry->name + ": " + entry->note;
  }

  VerifyOutcome outcome = verify_catalog(catalog.identities, cfg, notes);
  for (const auto& report : outcome.reports) {
    std::cout << verdict_name(report.verdict) << "  " << report.id;
    if (report.verdict != Verdict::pass) {
      if (!report.error.empty())
        std::cout << "  error: " << report.error;
      else
        std::cout << "  |diff| = " << report.abs_diff;
    }
    if (report.allowlisted) std::cout << "  [documented discrepancy]";
    std::cout << "\n";
  }
  std::cout << "pass: " << outcome.passes << "  fail: " << outcome.failures
            << "  indeterminate: " << outcome.indeterminate
            << "  documented-discrepancy: " << outcome.allowlisted_failures << "\n";
  if (outcome.allowlisted_failures > 0) {
    std::cout << "discrepancy summary (derived value differs from printed value):\n";
    for (const auto& report : outcome.reports)
      if (report.allowlisted && report.verdict == Verdict::fail)
        std::cout << "  " << report.id << ": " << notes[report.id]
                  << "  |printed - derived| = " << report.abs_diff << "\n";
  }

  if (!report_path.empty()) save_reports(outcome.reports, report_path);
  if (update_catalog) {
    std::map<std::string, const VerifyReport*> by_id;
    for (const auto& report : outcome.reports) by_id[report.id] = &report;
    for (auto& identity : catalog.identities) {
      const VerifyReport* report = by_id[identity.id];
      if (report == nullptr) continue;
      switch (report->verdict) {
        case Verdict::pass:
          identity.status = {IdentityStatus::State::verified, report->abs_diff};
          break;
        case Verdict::fail:
          identity.status = {IdentityStatus::State::failed,
                             report->error.empty() ? report->abs_diff : report->error};
          break;
        case Verdict::indeterminate:
          identity.status = {IdentityStatus::State::unverified, ""};
          break;
      }
    }
    catalog.reports = outcome.reports;
    save_catalog(catalog, catalog_path);
  }
  return std::min(outcome.failures, kMaxFailureExit);
}

int run_combine(const std::string& spec_path, const std::string& catalog_path,
                const std::string& out_path) {
  CatalogFile catalog = load_catalog(catalog_path);
  auto requests = load_combination_spec(spec_path);
  size_t before = catalog.identities.size();
  apply_combinations(catalog, requests);
  for (size_t i = before; i < catalog.identities.size(); ++i) {
    const auto& identity = catalog.identities[i];
    std::cout << "appended " << identity.id << "  " << identity_text(identity, true) << "\n";
  }
  save_catalog(catalog, out_path.empty() ? catalog_path : out_path);
  return kExitOk;
}

int run_export(const std::string& catalog_path, const std::string& format,
               const std::string& out_path, bool pi_form) {
  CatalogFile catalog = load_catalog(catalog_path);
  std::string document;
  if (format == "latex")
    document = export_latex(catalog, pi_form);
  else if (format == "json")
    document = catalog_to_json(catalog);
  else
    throw std::invalid_argument("unknown export format '" + format + "'");
  if (out_path.empty()) {
    std::cout << document;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    out << document;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eulerforge: exact Euler-sum identities from hypergeometric summation theorems"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "expand a theorem and extract identities");
  std::string theorem = "all";
  int degree = 5;
  std::string gen_out = "catalog.json";
  bool gen_pi_form = false;
  generate->add_option("--theorem", theorem, "gauss|watson|bailey|wang|all")->required();
  generate->add_option("--degree", degree, "total expansion degree (1..6)")
      ->required()
      ->check(CLI::Range(1, 6));
  generate->add_option("--out", gen_out, "output catalog path")->required();
  generate->add_flag("--pi-form", gen_pi_form, "render zeta(2)/zeta(4) as powers of pi");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "numerically verify a catalog");
  std::string verify_catalog_path, allowlist_path, report_path;
  bool update_catalog = false;
  double tol = 0.0;
  long max_terms = 0;
  long prec_bits = 0;
  int tail_order = 2;
  verify_cmd->add_option("catalog", verify_catalog_path, "catalog to verify")->required();
  verify_cmd->add_option("--tol", tol, "override tolerance for every family");
  verify_cmd->add_option("--max-terms", max_terms, "override partial-sum cutoff");
  verify_cmd->add_option("--prec-bits", prec_bits, "working precision in bits (>= 64)");
  verify_cmd->add_option("--tail-order", tail_order, "tail correction order (1..3)");
  verify_cmd->add_option("--allowlist", allowlist_path, "documented-discrepancy list");
  verify_cmd->add_option("--out", report_path, "write the verification report here");
  verify_cmd->add_flag("--update-catalog", update_catalog,
                       "write statuses and reports back into the catalog");

  // combine
  auto* combine_cmd = app.add_subcommand("combine", "derive linear combinations");
  std::string spec_path, combine_catalog_path, combine_out;
  combine_cmd->add_option("--spec", spec_path, "combination spec JSON")->required();
  combine_cmd->add_option("--catalog", combine_catalog_path, "catalog to extend")->required();
  combine_cmd->add_option("--out", combine_out, "output path (default: update in place)");

  // export
  auto* export_cmd = app.add_subcommand("export", "render a catalog as LaTeX or JSON");
  std::string export_catalog_path, format, export_out;
  bool export_pi_form = false;
  export_cmd->add_option("catalog", export_catalog_path, "catalog to export")->required();
  export_cmd->add_option("--format", format, "latex|json")->required();
  export_cmd->add_option("--out", export_out, "output path (default: stdout)");
  export_cmd->add_flag("--pi-form", export_pi_form, "render zeta(2)/zeta(4) as powers of pi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return run_generate(theorem, degree, gen_out, gen_pi_form);
    if (verify_cmd->parsed()) {
      VerifyConfig cfg;
      cfg.precision_bits = prec_bits > 0 ? prec_bits : default_precision_bits();
      cfg.tail_order = tail_order;
      if (tol > 0.0) cfg.tolerance_override = tol;
      if (max_terms > 0) cfg.max_terms_override = max_terms;
      return run_verify(verify_catalog_path, allowlist_path, report_path, update_catalog, cfg);
    }
    if (combine_cmd->parsed()) return run_combine(spec_path, combine_catalog_path, combine_out);
    if (export_cmd->parsed())
      return run_export(export_catalog_path, format, export_out, export_pi_form);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
