#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algx/approx.hpp"
#include "algx/criteria.hpp"
#include "algx/errors.hpp"
#include "algx/harness.hpp"
#include "algx/normform.hpp"
#include "algx/serialize.hpp"

namespace {

struct Global {
  long precision_digits = 50;
  unsigned long budget_ms = 0;
  unsigned long seed = 0;
  std::string out;
  std::string format = "json";

  algx::prec_t bits() const {
    return static_cast<algx::prec_t>(
        std::ceil(static_cast<double>(precision_digits) * 3.3219280948873623));
  }

  void emit(const std::string& text) const {
    if (out.empty())
      std::cout << text << '\n';
    else
      algx::write_text_file(out, text);
  }
};

algx::NumberField load_field(const std::string& field_file,
                             const std::string& poly_text,
                             const std::string& label) {
  if (!field_file.empty()) return algx::field_from_file(field_file);
  if (poly_text.empty())
    throw algx::domain_error("provide --field or --poly");
  return algx::NumberField(algx::poly_from_json(poly_text), label);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"effective approximation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Global g;
  app.add_option("--precision-digits", g.precision_digits,
                 "working precision in decimal digits")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-ms", g.budget_ms, "time budget in milliseconds");
  app.add_option("--seed", g.seed, "RNG seed for sampling");
  app.add_option("--out", g.out, "write output to this file instead of stdout");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string field_file, poly_text, label;
  auto add_field_opts = [&](CLI::App* cmd) {
    cmd->add_option("--field", field_file, "field JSON file {label, poly}");
    cmd->add_option("--poly", poly_text,
                    "defining polynomial, JSON array, constant term first");
    cmd->add_option("--label", label, "label for --poly input");
  };

  auto* criteria = app.add_subcommand("criteria", "field criteria");
  auto* crit_check = criteria->add_subcommand("check", "evaluate the criteria");
  add_field_opts(crit_check);
  std::vector<int> ns{4};
  auto* crit_classify =
      criteria->add_subcommand("classify", "criteria plus w_n^* and the gate");
  add_field_opts(crit_classify);
  crit_classify->add_option("--n", ns, "approximant degrees to classify");

  auto* approx = app.add_subcommand("approx", "approximation constructions");
  long pell_r = 2, pell_s = 3;
  int pell_count = 6;
  auto* ap_pell = approx->add_subcommand(
      "pell", "quadratic approximants to sqrt(r) + i sqrt(s)");
  ap_pell->add_option("--r", pell_r, "Pell parameter r")->check(CLI::PositiveNumber);
  ap_pell->add_option("--s", pell_s, "parameter s")->check(CLI::PositiveNumber);
  ap_pell->add_option("--count", pell_count, "number of Pell solutions")
      ->check(CLI::PositiveNumber);

  size_t root_index = 0;
  int exp_n = 2;
  long exp_hmax = 20;
  auto* ap_exp = approx->add_subcommand(
      "exponents", "empirical w_n and w_n^* for a root of --poly");
  add_field_opts(ap_exp);
  ap_exp->add_option("--root-index", root_index, "canonical root index");
  ap_exp->add_option("--n", exp_n, "approximant degree")->check(CLI::PositiveNumber);
  ap_exp->add_option("--hmax", exp_hmax, "height bound")->check(CLI::PositiveNumber);

  auto* normform = app.add_subcommand("normform", "norm form analysis");
  int nf_n = 2;
  long nf_m = 1, nf_xmax = 10;
  bool match_sign = false;
  auto* nf_enum = normform->add_subcommand("enumerate", "solutions of |N(x)| = |m|");
  add_field_opts(nf_enum);
  nf_enum->add_option("--n", nf_n, "form degree (coordinates 0..n)");
  nf_enum->add_option("--m", nf_m, "target norm");
  nf_enum->add_option("--xmax", nf_xmax, "coordinate bound")->check(CLI::PositiveNumber);
  nf_enum->add_flag("--match-sign", match_sign, "require norm == m exactly");

  long fit_min_shell = 4;
  auto* nf_prof = normform->add_subcommand("profile", "minimal |norm| per shell");
  add_field_opts(nf_prof);
  nf_prof->add_option("--n", nf_n, "form degree");
  nf_prof->add_option("--xmax", nf_xmax, "largest shell")->check(CLI::PositiveNumber);
  nf_prof->add_option("--fit-min-shell", fit_min_shell, "first shell used in the fit");

  auto* nf_rel = normform->add_subcommand(
      "relations", "exact embedding relation matrix (Galois fields)");
  add_field_opts(nf_rel);
  nf_rel->add_option("--n", nf_n, "form degree");

  auto* experiment = app.add_subcommand("experiment", "sampling experiments");
  std::string catalog_file;
  std::vector<int> builtin_degrees;
  int per_field = 100;
  long radius = 10;
  auto* exp_sample =
      experiment->add_subcommand("sample", "independence criterion sampling");
  exp_sample->add_option("--catalog", catalog_file, "field catalog JSON file");
  exp_sample->add_option("--builtin-degree", builtin_degrees,
                         "add builtin surd fields of these degrees");
  exp_sample->add_option("--per-field", per_field, "samples per field")
      ->check(CLI::PositiveNumber);
  exp_sample->add_option("--coeff-bound", radius,
                         "coordinates drawn uniformly from [-R, R]");

  auto* golden = app.add_subcommand("golden", "fixed expectations");
  golden->add_subcommand("run", "run the golden suite");

  CLI11_PARSE(app, argc, argv);

  try {
    algx::ExpressOptions eopt;
    eopt.prec = g.bits();
    eopt.prec_cap = std::max<algx::prec_t>(eopt.prec, algx::prec_t(1) << 14);

    if (crit_check->parsed() || crit_classify->parsed()) {
      algx::NumberField K = load_field(field_file, poly_text, label);
      algx::ClassificationReport rep;
      rep.label = K.label();
      rep.criteria = algx::analyze_field(K, eopt);
      rep.real_subfield = algx::real_subfield_degree(K, eopt);
      if (crit_classify->parsed()) {
        rep.ns = ns;
        for (int n : ns) {
          rep.wstar.push_back(algx::classify_wstar(rep.criteria, n));
          rep.gates.push_back(algx::theorem_gate(rep.criteria, n));
        }
      }
      g.emit(algx::classification_to_json(rep));
      return 0;
    }

    if (ap_pell->parsed()) {
      std::vector<algx::PellApproximant> runs;
      for (const auto& s : algx::pell_solve(pell_r, pell_count))
        runs.push_back(algx::pell_approximant(pell_r, pell_s, s, g.bits()));
      g.emit(g.format == "csv" ? algx::pell_report_to_csv(runs)
                               : algx::pell_report_to_json(runs));
      return 0;
    }

    if (ap_exp->parsed()) {
      algx::NumberField K = load_field(field_file, poly_text, label);
      algx::AlgebraicNumber xi =
          algx::AlgebraicNumber::root_of(K.poly(), root_index, g.bits());
      algx::EstimateOptions opt;
      opt.prec = g.bits();
      opt.budget_ms = g.budget_ms;
      auto rep = algx::estimate_exponents(xi, exp_n, exp_hmax, opt);
      g.emit(g.format == "csv" ? algx::exponent_report_to_csv(rep)
                               : algx::exponent_report_to_json(rep));
      return rep.partial ? 2 : 0;
    }

    if (nf_enum->parsed()) {
      algx::NumberField K = load_field(field_file, poly_text, label);
      algx::EnumerateOptions opt;
      opt.match_sign = match_sign;
      opt.budget_ms = g.budget_ms;
      auto res = algx::enumerate_solutions(K, nf_n, nf_m, nf_xmax, opt);
      g.emit(g.format == "csv" ? algx::solutions_to_csv(res)
                               : algx::solutions_to_json(res));
      return res.partial ? 2 : 0;
    }

    if (nf_prof->parsed()) {
      algx::NumberField K = load_field(field_file, poly_text, label);
      algx::ProfileOptions opt;
      opt.fit_min_shell = fit_min_shell;
      opt.budget_ms = g.budget_ms;
      auto prof = algx::min_norm_profile(K, nf_n, nf_xmax, opt);
      g.emit(g.format == "csv" ? algx::profile_to_csv(prof)
                               : algx::profile_to_json(prof));
      return prof.partial ? 2 : 0;
    }

    if (nf_rel->parsed()) {
      algx::NumberField K = load_field(field_file, poly_text, label);
      auto A = algx::relation_matrix(K, nf_n, eopt);
      g.emit(algx::relation_matrix_to_json(A, g.bits()));
      return algx::full_rank_condition(A).full_rank ? 0 : 2;
    }

    if (exp_sample->parsed()) {
      std::vector<algx::FieldCatalogEntry> cat =
          catalog_file.empty() ? algx::builtin_catalog(builtin_degrees)
                               : algx::load_catalog(catalog_file);
      auto rep = algx::sample_experiment(cat, per_field, radius, g.seed);
      g.emit(algx::experiment_to_json(rep));
      return rep.total_failed == 0 ? 0 : 2;
    }

    if (golden->parsed()) {
      auto rep = algx::golden_suite();
      std::string text;
      for (const auto& c : rep.checks) {
        text += (c.pass ? "pass  " : "FAIL  ") + c.name;
        if (!c.detail.empty()) text += "  (" + c.detail + ")";
        text += '\n';
      }
      text += rep.all_pass ? "all checks passed" : "some checks FAILED";
      g.emit(text);
      return rep.all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  std::cerr << "error: no subcommand\n";
  return 1;
}
