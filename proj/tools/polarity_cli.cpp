// Command-line front end: `polarity verify|analyze|scenario`.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 unusable invocation
// or input. Reports are deterministic JSON on stdout (or --out).

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polarity/commands.hpp"
#include "polarity/version.hpp"

namespace {

using polarity::Rational;
using polarity::Vec3;

bool parse_rational(const std::string& text, Rational& out, std::string& err) {
  try {
    out = Rational::from_string(text);
    return true;
  } catch (const std::exception& e) {
    err = "invalid rational \"" + text + "\": " + e.what();
    return false;
  }
}

bool parse_vec3(const std::string& text, Vec3& out, std::string& err) {
  std::stringstream ss(text);
  std::string part;
  int i = 0;
  while (std::getline(ss, part, ',')) {
    if (i >= 3) {
      err = "expected three comma-separated rationals, got \"" + text + "\"";
      return false;
    }
    if (!parse_rational(part, out[i], err)) return false;
    ++i;
  }
  if (i != 3) {
    err = "expected three comma-separated rationals, got \"" + text + "\"";
    return false;
  }
  return true;
}

int usage_error(const std::string& message) {
  std::cerr << "polarity: " << message << "\n";
  return 2;
}

int emit(const polarity::CommandOutcome& outcome, const std::string& out_path) {
  if (outcome.exit_code == 2) return usage_error(outcome.error);
  const std::string text = outcome.report.to_string();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) return usage_error("cannot open output file \"" + out_path + "\"");
    f << text;
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t env_seed = 1;
  if (const char* env = std::getenv("POLARITY_SEED")) {
    try {
      std::size_t used = 0;
      env_seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      return usage_error(std::string("POLARITY_SEED is not an unsigned integer: ") + env);
    }
  }

  CLI::App app{"exact tensor calculus for couple stresses on a cube"};
  app.set_version_flag("--version", polarity::kToolVersion);
  app.require_subcommand(1);

  // verify ------------------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "prove the identity-check registry on seeded random fields");
  std::uint64_t seed = env_seed;
  int trials = 8;
  int max_degree = 3;
  std::string out_path;
  verify->add_option("--seed", seed, "RNG seed (default: POLARITY_SEED or 1)");
  verify->add_option("--trials", trials, "random trials per check (> 0)");
  verify->add_option("--max-degree", max_degree, "maximum polynomial degree of random fields");
  verify->add_option("--out", out_path, "write the report to this file instead of stdout");

  // analyze -----------------------------------------------------------------
  CLI::App* analyze = app.add_subcommand("analyze", "expand, split and classify a stress field document");
  std::string field_file;
  std::string x0_text = "0,0,0";
  std::string edge_text = "1";
  std::string couple_text = "0,0,0";
  bool merge_psi = false;
  std::string analyze_out;
  analyze->add_option("field_file", field_file, "JSON field document with a tensor entry \"sigma\"")
      ->required();
  analyze->add_option("--x0", x0_text, "expansion point, three rationals \"p,q,r\"");
  analyze->add_option("--edge", edge_text, "cube edge = couple-stress length L_c (> 0)");
  analyze->add_option("--couple", couple_text, "constant body couple \"a,b,c\"");
  analyze->add_flag("--merge-psi", merge_psi, "fold Div psi into the couple-stress term of the balance display");
  analyze->add_option("--out", analyze_out, "write the report to this file instead of stdout");

  // scenario ----------------------------------------------------------------
  CLI::App* scenario = app.add_subcommand("scenario", "run a named closed-form scenario");
  std::string scenario_name;
  scenario
      ->add_option("name", scenario_name,
                   "one of: torsion, trace-free, yang-cantilever, yang-surface, conformal")
      ->required();
  std::string alpha_bar_text = "1";
  std::string mu_text = "1";
  std::string lambda_text = "1";
  std::string lc_text = "1";
  std::string alpha1_text = "1/12";
  std::string alpha2_text = "1";
  std::string alpha3_text = "0";
  std::string dx_text = "1";
  std::string a_text = "1";
  std::string b_text = "2";
  std::string c_text = "3";
  std::string family_l_text = "1";
  std::string length_text = "1";
  std::string magnitude_text = "1";
  std::uint64_t scenario_seed = env_seed;
  int scenario_degree = 2;
  std::string center_text = "0,0,0";
  std::string scenario_edge_text = "1";
  std::string scenario_out;
  scenario->add_option("--alpha-bar", alpha_bar_text, "torsion: twist rate");
  scenario->add_option("--mu", mu_text, "material: shear modulus");
  scenario->add_option("--lambda", lambda_text, "material: first Lame parameter");
  scenario->add_option("--L-c", lc_text, "material: characteristic length");
  scenario->add_option("--alpha1", alpha1_text, "material: dev sym curvature weight");
  scenario->add_option("--alpha2", alpha2_text, "material: skew curvature weight");
  scenario->add_option("--alpha3", alpha3_text, "material: spherical curvature weight");
  scenario->add_option("--dx", dx_text, "torsion: cell edge");
  scenario->add_option("--a", a_text, "trace-free: first family coefficient");
  scenario->add_option("--b", b_text, "trace-free: second family coefficient");
  scenario->add_option("--c", c_text, "trace-free: third family coefficient");
  scenario->add_option("--L", family_l_text, "trace-free: cube edge");
  scenario->add_option("--length", length_text, "yang-cantilever: beam length");
  scenario->add_option("--couple-magnitude", magnitude_text, "yang-cantilever: end couple magnitude");
  scenario->add_option("--seed", scenario_seed, "yang-surface, conformal: RNG seed");
  scenario->add_option("--max-degree", scenario_degree, "yang-surface: degree of the random couple-stress field");
  scenario->add_option("--center", center_text, "yang-surface: cube center \"p,q,r\"");
  scenario->add_option("--edge", scenario_edge_text, "yang-surface: cube edge (> 0)");
  scenario->add_option("--out", scenario_out, "write the report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string err;
  if (verify->parsed()) {
    return emit(polarity::cmd_verify(seed, trials, max_degree), out_path);
  }

  if (analyze->parsed()) {
    polarity::AnalyzeOptions opts;
    opts.merge_psi = merge_psi;
    if (!parse_vec3(x0_text, opts.x0, err)) return usage_error(err);
    if (!parse_rational(edge_text, opts.L_c, err)) return usage_error(err);
    if (!parse_vec3(couple_text, opts.body_couple, err)) return usage_error(err);
    std::ifstream f(field_file);
    if (!f) return usage_error("cannot read field document \"" + field_file + "\"");
    std::stringstream buffer;
    buffer << f.rdbuf();
    return emit(polarity::cmd_analyze(buffer.str(), opts), analyze_out);
  }

  // scenario
  if (scenario_name == "torsion") {
    polarity::TorsionParams p;
    if (!parse_rational(alpha_bar_text, p.alpha_bar, err)) return usage_error(err);
    if (!parse_rational(mu_text, p.material.mu, err)) return usage_error(err);
    if (!parse_rational(lambda_text, p.material.lambda, err)) return usage_error(err);
    if (!parse_rational(lc_text, p.material.L_c, err)) return usage_error(err);
    if (!parse_rational(alpha1_text, p.material.alpha1, err)) return usage_error(err);
    if (!parse_rational(alpha2_text, p.material.alpha2, err)) return usage_error(err);
    if (!parse_rational(alpha3_text, p.material.alpha3, err)) return usage_error(err);
    if (!parse_rational(dx_text, p.dx, err)) return usage_error(err);
    return emit(polarity::cmd_scenario_torsion(p), scenario_out);
  }
  if (scenario_name == "trace-free") {
    polarity::TraceFreeFamilyParams p;
    if (!parse_rational(a_text, p.a, err)) return usage_error(err);
    if (!parse_rational(b_text, p.b, err)) return usage_error(err);
    if (!parse_rational(c_text, p.c, err)) return usage_error(err);
    if (!parse_rational(family_l_text, p.L, err)) return usage_error(err);
    return emit(polarity::cmd_scenario_trace_free(p), scenario_out);
  }
  if (scenario_name == "yang-cantilever") {
    Rational ell, magnitude;
    if (!parse_rational(length_text, ell, err)) return usage_error(err);
    if (!parse_rational(magnitude_text, magnitude, err)) return usage_error(err);
    return emit(polarity::cmd_scenario_yang_cantilever(ell, magnitude), scenario_out);
  }
  if (scenario_name == "yang-surface") {
    Vec3 center;
    Rational edge;
    if (!parse_vec3(center_text, center, err)) return usage_error(err);
    if (!parse_rational(scenario_edge_text, edge, err)) return usage_error(err);
    if (!(edge > Rational(0))) return usage_error("yang-surface: --edge must be positive");
    return emit(
        polarity::cmd_scenario_yang_surface(scenario_seed, scenario_degree, polarity::Cube{center, edge}),
        scenario_out);
  }
  if (scenario_name == "conformal") {
    polarity::IsotropicMaterial mat;
    if (!parse_rational(mu_text, mat.mu, err)) return usage_error(err);
    if (!parse_rational(lambda_text, mat.lambda, err)) return usage_error(err);
    if (!parse_rational(lc_text, mat.L_c, err)) return usage_error(err);
    if (!parse_rational(alpha1_text, mat.alpha1, err)) return usage_error(err);
    if (!parse_rational(alpha2_text, mat.alpha2, err)) return usage_error(err);
    if (!parse_rational(alpha3_text, mat.alpha3, err)) return usage_error(err);
    return emit(polarity::cmd_scenario_conformal(scenario_seed, mat), scenario_out);
  }
  return usage_error("unknown scenario \"" + scenario_name +
                     "\"; expected torsion, trace-free, yang-cantilever, yang-surface or conformal");
}
