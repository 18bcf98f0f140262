// Command-line front end: build or load algebras, run the exact analyses,
// emit deterministic text or JSON reports.
//
// Exit codes: 0 = analysis ran (whatever the verdict), 2 = usage or parse
// error, 3 = capability/precondition error (e.g. irrational spectrum,
// non-essential element where essentiality is required).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "liekms/catalog.hpp"
#include "liekms/errors.hpp"
#include "liekms/essential.hpp"
#include "liekms/json_io.hpp"
#include "liekms/modular_toy.hpp"
#include "liekms/parse.hpp"
#include "liekms/report_json.hpp"
#include "liekms/thermal.hpp"

namespace {

using namespace liekms;

struct Source {
  AlgebraPtr algebra;
  std::optional<CatalogEntry> entry;
};

bool looks_like_catalog_spec(const std::string& s) {
  std::size_t colon = s.find(':');
  if (colon == std::string::npos) return false;
  std::string family = s.substr(0, colon);
  for (const char* f : {"gl", "sl", "sp", "so", "su", "poincare"})
    if (family == f) return true;
  return false;
}

Source resolve_algebra(const std::string& spec) {
  Source src;
  if (looks_like_catalog_spec(spec)) {
    src.entry = build_from_spec(spec);
    src.algebra = src.entry->algebra;
  } else {
    src.algebra = load_algebra_file(spec);
  }
  return src;
}

void emit(const nlohmann::json& j, const std::string& output, const std::string& text) {
  if (output == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

int run_essential(const Source& src, const std::string& expr, bool crosscheck, const std::string& output) {
  Element m = parse_element(src.algebra, expr);
  EssentialityReport r = is_essential(m, crosscheck);
  std::string text;
  text += "algebra: " + src.algebra->name() + " (dim " + std::to_string(src.algebra->dim()) + ")\n";
  text += "element: " + m.expression() + "\n";
  text += "verdict: " + std::string(to_string(r.verdict)) + "\n";
  text += "diagonalizable over R: " + yesno(r.diagonalizable.is_yes()) + "\n";
  text += "dim [m,g]: " + std::to_string(r.gstar.dim()) + ", dim span(m)+[m,g]+[[m,g],[m,g]]: " +
          std::to_string(r.span_sum_dim) + "\n";
  if (r.criterion_a_dim)
    text += "generation cross-check dim: " + std::to_string(*r.criterion_a_dim) + "\n";
  if (r.failure_reason) text += "reason: " + *r.failure_reason + "\n";
  if (src.entry && src.entry->no_essential_elements)
    text += "note: this algebra has a negative-definite Killing form; no element is essential\n";
  emit(essentiality_to_json(r), output, text);
  return 0;
}

int run_closure(const Source& src, const std::vector<std::string>& exprs, const std::string& output) {
  std::vector<Element> seeds;
  for (const auto& e : exprs) seeds.push_back(parse_element(src.algebra, e));
  InvarianceClosure c = invariance_closure(src.algebra, seeds);
  std::string text;
  text += "closure dim: " + std::to_string(c.subspace.dim()) + " of " +
          std::to_string(src.algebra->dim()) + "\n";
  text += "is_full: " + yesno(c.is_full) + "\n";
  for (const Element& e : c.subspace.basis_elements()) text += "  " + e.expression() + "\n";
  emit(closure_to_json(c), output, text);
  return 0;
}

int run_temperature(const Source& src, const std::string& expr, const std::string& output) {
  Element m = parse_element(src.algebra, expr);
  TemperatureReport r = kms_temperature(m);
  std::string text;
  text += "moduli:";
  for (const auto& mod : r.moduli) text += " " + mod.str();
  text += "\nuniform: " + yesno(r.uniform) + "\n";
  text += "beta: " + (r.beta ? r.beta->str() : std::string("(none)")) + "\n";
  text += "notes: " + r.notes + "\n";
  emit(temperature_to_json(r), output, text);
  return 0;
}

int run_sl2(const Source& src, const std::string& expr, const std::string& lambda_str, int trials,
            std::uint64_t seed, const std::string& output) {
  Element m = parse_element(src.algebra, expr);
  TemperatureReport t = kms_temperature(m);
  Rational lambda(0);
  if (!lambda_str.empty()) {
    lambda = Rational::parse(lambda_str);
  } else {
    if (!t.uniform || t.moduli.empty())
      throw precondition_error("sl2: no uniform modulus available; pass --lambda explicitly");
    lambda = t.moduli.front();
  }
  std::vector<Sl2Triple> triples = find_sl2_triples(m, lambda, trials, seed);
  nlohmann::json j = temperature_to_json(t);
  nlohmann::json jt = nlohmann::json::array();
  nlohmann::json jc = nlohmann::json::array();
  std::string text;
  text += "lambda: " + lambda.str() + ", triples found: " + std::to_string(triples.size()) + "\n";
  for (const auto& triple : triples) {
    RotationCheck check = src.entry ? rotation_compactness_check(*src.entry, triple)
                                    : rotation_compactness_check(triple);
    jt.push_back(triple_to_json(triple));
    jc.push_back(rotation_check_to_json(check));
    text += "  n+ = " + triple.n_plus.expression() + "\n";
    text += "  n- = " + triple.n_minus.expression() + "\n";
    text += "  rotation = " + triple.rotation.expression() +
            " (ad spectrum imaginary: " + yesno(check.ad_spectrum_imaginary);
    if (check.rep_periodic) text += ", rep periodic: " + yesno(*check.rep_periodic);
    text += ")\n";
  }
  j["triples"] = jt;
  j["rotation_checks"] = jc;
  emit(j, output, text);
  return 0;
}

int run_killing(const Source& src, const std::string& output) {
  KillingReport r = killing_report(src.algebra);
  std::string text;
  text += "signature (n_pos, n_neg, n_zero): (" + std::to_string(r.n_pos) + ", " +
          std::to_string(r.n_neg) + ", " + std::to_string(r.n_zero) + ")\n";
  text += "negative definite: " + yesno(r.negative_definite) + "\n";
  text += "nondegenerate: " + yesno(r.nondegenerate) + "\n";
  emit(killing_to_json(r), output, text);
  return 0;
}

int run_modular_demo(int n, double beta, std::uint64_t seed, int trials, const std::string& output) {
  std::mt19937_64 rng(seed);
  toy::Mat h = toy::random_hermitian(n, rng);
  toy::ModularToyState s = toy::gibbs_state(h, beta);

  double kms_max = 0.0;
  for (int probe = 0; probe < 3; ++probe) {
    toy::Mat a = toy::random_matrix(n, rng);
    toy::Mat b = toy::random_matrix(n, rng);
    for (double t : {0.0, 0.7, 1.3}) kms_max = std::max(kms_max, toy::kms_verify(s, a, b, t));
  }
  double cov_max = 0.0;
  for (double t : {0.3, 1.0, 7.0}) cov_max = std::max(cov_max, toy::modular_covariance_check(s, t));
  double j_max = 0.0;
  for (int probe = 0; probe < 3; ++probe)
    j_max = std::max(j_max, toy::j_action_check(s, toy::random_matrix(n, rng)));
  toy::PassivityResult p = toy::passivity_sample(s, trials, seed + 1);

  nlohmann::json j;
  j["kms_residual_max"] = kms_max;
  j["covariance_residual_max"] = cov_max;
  j["j_residual_max"] = j_max;
  nlohmann::json jp;
  jp["min_gap"] = p.min_gap;
  jp["violations"] = p.violations;
  j["passivity"] = jp;
  std::string text;
  text += "kms residual max: " + fmt_double(kms_max) + "\n";
  text += "covariance residual max: " + fmt_double(cov_max) + "\n";
  text += "J residual max: " + fmt_double(j_max) + "\n";
  text += "passivity: min gap " + fmt_double(p.min_gap) + ", violations " +
          std::to_string(p.violations) + "\n";
  emit(j, output, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact essentiality, KMS-temperature and modular-structure analysis of Lie algebras"};
  app.require_subcommand(1);

  std::string output = "text";
  bool crosscheck = false;
  std::uint64_t seed = 1;
  app.add_option("--output", output, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--crosscheck", crosscheck, "also run the generation-criterion cross-check");
  app.add_option("--seed", seed, "seed for randomized searches and sampling");

  std::string algebra_spec, element_expr, out_path, lambda_str;
  std::vector<std::string> seed_exprs;
  int demo_n = 3, demo_trials = 1000, sl2_trials = 64;
  double demo_beta = 1.0;

  CLI::App* cat = app.add_subcommand("catalog", "list catalog families or describe one algebra");
  cat->add_option("--algebra", algebra_spec, "catalog spec, e.g. so:1,2");
  cat->fallthrough();

  CLI::App* exp = app.add_subcommand("export", "emit the structure-constant JSON for an algebra");
  exp->add_option("--algebra", algebra_spec, "catalog spec or JSON file")->required();
  exp->add_option("--out", out_path, "output file (default: stdout)");
  exp->fallthrough();

  CLI::App* ess = app.add_subcommand("essential", "decide essentiality of an element");
  ess->add_option("--algebra", algebra_spec)->required();
  ess->add_option("--element", element_expr)->required();
  ess->fallthrough();

  CLI::App* clo = app.add_subcommand("closure", "invariant-direction closure of seed elements");
  clo->add_option("--algebra", algebra_spec)->required();
  clo->add_option("--element", seed_exprs, "seed element (repeatable)")->required();
  clo->fallthrough();

  CLI::App* tmp = app.add_subcommand("temperature", "KMS temperature forced by the ad-spectrum");
  tmp->add_option("--algebra", algebra_spec)->required();
  tmp->add_option("--element", element_expr)->required();
  tmp->fallthrough();

  CLI::App* sl2 = app.add_subcommand("sl2", "find sl(2,R) triples over an essential element");
  sl2->add_option("--algebra", algebra_spec)->required();
  sl2->add_option("--element", element_expr)->required();
  sl2->add_option("--lambda", lambda_str, "eigenvalue to pair (default: the uniform modulus)");
  sl2->add_option("--trials", sl2_trials, "randomized search trials");
  sl2->fallthrough();

  CLI::App* kil = app.add_subcommand("killing", "Killing form and signature");
  kil->add_option("--algebra", algebra_spec)->required();
  kil->fallthrough();

  CLI::App* demo = app.add_subcommand("modular-demo", "finite-dimensional Gibbs/modular identity checks");
  demo->add_option("--n", demo_n, "matrix size");
  demo->add_option("--beta", demo_beta, "inverse temperature");
  demo->add_option("--trials", demo_trials, "passivity trials");
  demo->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cat->parsed()) {
      if (algebra_spec.empty()) {
        nlohmann::json j;
        j["families"] = catalog_family_usage();
        std::string text;
        for (const auto& f : catalog_family_usage()) text += f + "\n";
        emit(j, output, text);
        return 0;
      }
      CatalogEntry entry = build_from_spec(algebra_spec);
      std::string text = entry.algebra->name() + ": dim " + std::to_string(entry.algebra->dim()) + "\nbasis:";
      for (const auto& l : entry.algebra->basis_labels()) text += " " + l;
      text += "\n";
      if (entry.no_essential_elements) text += "no essential elements (compact)\n";
      for (const auto& [el, expected] : entry.known_essential)
        text += "golden: " + el.expression() + " -> " + (expected ? "essential" : "not essential") + "\n";
      emit(catalog_entry_to_json(entry), output, text);
      return 0;
    }
    if (exp->parsed()) {
      Source src = resolve_algebra(algebra_spec);
      if (out_path.empty())
        std::cout << algebra_to_json_string(*src.algebra);
      else
        save_algebra_file(*src.algebra, out_path);
      return 0;
    }
    Source src;
    if (ess->parsed() || clo->parsed() || tmp->parsed() || sl2->parsed() || kil->parsed())
      src = resolve_algebra(algebra_spec);
    if (ess->parsed()) return run_essential(src, element_expr, crosscheck, output);
    if (clo->parsed()) return run_closure(src, seed_exprs, output);
    if (tmp->parsed()) return run_temperature(src, element_expr, output);
    if (sl2->parsed()) return run_sl2(src, element_expr, lambda_str, sl2_trials, seed, output);
    if (kil->parsed()) return run_killing(src, output);
    if (demo->parsed()) return run_modular_demo(demo_n, demo_beta, seed, demo_trials, output);
  } catch (const capability_error& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 3;
  } catch (const precondition_error& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
