#pragma once

/// @file commands.hpp
/// The three CLI commands as library functions, so the test suite can drive
/// them directly. Exit-code contract:
///   0  command ran and every reported check passed
///   1  command ran but at least one check failed
///   2  unusable invocation or input (bad options, malformed document,
///      missing required field entry)

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polarity/checks.hpp"
#include "polarity/cube.hpp"
#include "polarity/elasticity.hpp"
#include "polarity/field.hpp"
#include "polarity/field_json.hpp"
#include "polarity/random_fields.hpp"
#include "polarity/rational.hpp"
#include "polarity/report.hpp"
#include "polarity/scenarios.hpp"
#include "polarity/taylor.hpp"
#include "polarity/tensor.hpp"

namespace polarity {

struct CommandOutcome {
  int exit_code = 0;
  RunReport report;
  std::string error;  ///< set when exit_code == 2
};

namespace detail {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.to_string(); }

inline Json to_json(const Vec3& v) { return Json::array({v[0].to_string(), v[1].to_string(), v[2].to_string()}); }

inline Json to_json(const Mat3& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i)
    rows.push_back(Json::array({m(i, 0).to_string(), m(i, 1).to_string(), m(i, 2).to_string()}));
  return rows;
}

inline Json to_json(const PolyScalarField& f) { return to_string(f); }

inline Json to_json(const PolyVec3Field& v) {
  return Json::array({to_string(v[0]), to_string(v[1]), to_string(v[2])});
}

inline Json to_json(const PolyMat3Field& x) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i)
    rows.push_back(Json::array({to_string(x(i, 0)), to_string(x(i, 1)), to_string(x(i, 2))}));
  return rows;
}

template <typename T>
CheckResult equality_check(const std::string& id, const std::string& anchor, const T& lhs,
                           const T& rhs) {
  if (lhs == rhs) return check_pass(id, anchor);
  return check_fail(id, anchor, to_string(lhs), to_string(rhs));
}

inline CheckResult predicate_check(const std::string& id, const std::string& anchor, bool ok,
                                   const std::string& lhs = "", const std::string& rhs = "") {
  return ok ? check_pass(id, anchor) : check_fail(id, anchor, lhs, rhs);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

inline CommandOutcome cmd_verify(std::uint64_t seed, int trials, int max_degree) {
  CommandOutcome out;
  if (trials <= 0) {
    out.exit_code = 2;
    out.error = "verify: --trials must be a positive integer";
    return out;
  }
  if (max_degree < 0) {
    out.exit_code = 2;
    out.error = "verify: --max-degree must be non-negative";
    return out;
  }
  out.report.command = "verify";
  out.report.seed = seed;
  detail::Json params;
  params["trials"] = trials;
  params["max_degree"] = max_degree;
  params["check_count"] = identity_checks().size();
  out.report.results = std::move(params);
  XorShift64 rng(seed);
  for (const IdentityCheck& check : identity_checks())
    out.report.checks.push_back(check.run(rng, trials, max_degree));
  out.exit_code = out.report.all_passed() ? 0 : 1;
  return out;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeOptions {
  Vec3 x0;                      ///< expansion point (cube center)
  Rational L_c = Rational(1);   ///< cube edge and couple-stress length, > 0
  Vec3 body_couple;             ///< constant applied body couple c
  bool merge_psi = false;       ///< fold Div psi into the couple-stress term
};

inline CommandOutcome cmd_analyze(const std::string& document_text, const AnalyzeOptions& opts) {
  CommandOutcome out;
  if (!(opts.L_c > Rational(0))) {
    out.exit_code = 2;
    out.error = "analyze: --edge must be positive";
    return out;
  }
  FieldDocument doc;
  try {
    doc = parse_field_document(document_text);
  } catch (const FieldParseError& e) {
    out.exit_code = 2;
    out.error = std::string("analyze: ") + e.what();
    return out;
  }
  if (!doc.has("sigma") || doc.at("sigma").rank != FieldRank::Tensor) {
    out.exit_code = 2;
    out.error = "analyze: the document must provide a tensor entry named \"sigma\"";
    return out;
  }
  const PolyMat3Field& sigma = doc.at("sigma").tensor;

  out.report.command = "analyze";
  out.report.input_digest = fnv1a_hex(document_text);

  const Cube cube{opts.x0, opts.L_c};
  const TaylorDecomposition t = expand(sigma, opts.x0, opts.L_c);
  const LinearSplit lin = split_linear(t);
  const BilinearSplit bil = split_bilinear(t);
  const PolyMat3Field quad = quadratic_piece(t);
  const PolyMat3Field trunc = reconstruct(t);

  detail::Json res;
  res["x0"] = detail::to_json(opts.x0);
  res["edge"] = opts.L_c.to_string();
  res["body_couple"] = detail::to_json(opts.body_couple);
  res["sigma0"] = detail::to_json(t.sigma0);
  res["truncation_error"] = truncation_error(sigma, opts.x0).to_string();

  const std::vector<std::pair<std::string, const PolyMat3Field*>> pieces = {
      {"constant", nullptr}, {"np", &lin.np}, {"p1", &lin.p1}, {"p2", &lin.p2},
      {"b1", &bil.b1},       {"b2", &bil.b2}, {"q", &quad}};
  const PolyMat3Field const_piece = constant_piece(t);
  detail::Json jpieces = detail::Json::object();
  for (const auto& [name, field] : pieces) {
    const PolyMat3Field& piece = field ? *field : const_piece;
    const PolarityEvidence ev = classify_with_evidence(piece, cube);
    detail::Json jp;
    jp["class"] = to_string(ev.cls);
    detail::Json couples = detail::Json::array();
    for (const Vec3& c : ev.face_couples) couples.push_back(detail::to_json(c));
    jp["face_couples"] = std::move(couples);
    jp["moment_about_center"] = detail::to_json(ev.angular_sum);
    jpieces[name] = std::move(jp);
  }
  res["pieces"] = std::move(jpieces);

  const Mat3 m = couple_stress_from_gradients(t);
  const auto [torsion_part, bending_part] = split_torsion_bending(m);
  const Mat3 x_chi = chi(trunc, opts.x0, opts.L_c);
  const PolyMat3Field psi_field = psi(trunc, opts.L_c);
  const Vec3 residual = angular_balance_residual(sigma, cube, opts.body_couple);
  const PolyMat3Field m_field = couple_stress_field(trunc, opts.L_c);
  const Vec3 div_m = div(m_field).evaluate(opts.x0);
  const Vec3 div_psi = div(psi_field).evaluate(opts.x0);
  const Vec3 skew_term = Rational(2) * axl_skew(t.sigma0 + x_chi);

  detail::Json jm;
  jm["m"] = detail::to_json(m);
  jm["torsion"] = detail::to_json(torsion_part);
  jm["bending"] = detail::to_json(bending_part);
  jm["symmetric"] = (m == transpose(m));
  res["couple_stress"] = std::move(jm);
  res["chi"] = detail::to_json(x_chi);
  res["psi"] = detail::to_json(psi_field);

  detail::Json jbal;
  if (opts.merge_psi) {
    jbal["div_m_plus_psi"] = detail::to_json(div_m + div_psi);
    jbal["merged_couple_stress_at_x0"] = detail::to_json(m + psi_field.evaluate(opts.x0));
  } else {
    jbal["div_m"] = detail::to_json(div_m);
    jbal["div_psi"] = detail::to_json(div_psi);
  }
  jbal["two_axl_skew"] = detail::to_json(skew_term);
  jbal["body_couple"] = detail::to_json(opts.body_couple);
  jbal["residual"] = detail::to_json(residual);
  res["angular_balance"] = std::move(jbal);

  const GradTrSplit gsplit = grad_tr_decomposition(sigma, opts.L_c);
  detail::Json jg;
  jg["grad_tr"] = detail::to_json(grad(tr(sigma)).evaluate(opts.x0));
  jg["div_diag"] = detail::to_json(gsplit.div_diag.evaluate(opts.x0));
  jg["axl_skew_term"] = detail::to_json(gsplit.axl_skew_term.evaluate(opts.x0));
  res["gradient_split"] = std::move(jg);

  detail::Json jpred;
  jpred["symmetry_conditions"] = symmetry_conditions_check(sigma, opts.x0);
  const auto axes = rotational_invariance_axes(sigma, opts.x0);
  jpred["rotational_invariance_axes"] = detail::Json::array({axes[0], axes[1], axes[2]});
  jpred["rotational_invariance"] = rotational_invariance_check(sigma, opts.x0);
  res["predicates"] = std::move(jpred);
  out.report.results = std::move(res);

  // Internal consistency checks; these hold for every input by theorem.
  const Rational area = opts.L_c * opts.L_c;
  bool p2_match = true;
  std::string p2_lhs, p2_rhs;
  for (int f = 0; f < kFaceCount && p2_match; ++f) {
    const Vec3 couple = face_couple_about_face_center(lin.p2, cube, f);
    const Vec3 predicted = (Rational(face_orientation(f)) * area) * m.col(face_axis(f));
    if (!(couple == predicted)) {
      p2_match = false;
      p2_lhs = to_string(couple);
      p2_rhs = to_string(predicted);
    }
  }
  out.report.checks.push_back(detail::predicate_check(
      "couple-stress.p2-face-couples",
      "column i of m, times the face area, is the face-i couple of the p2 piece", p2_match, p2_lhs,
      p2_rhs));
  out.report.checks.push_back(detail::equality_check(
      "angular-balance.two-routes",
      "the differential residual equals the boundary moment over the cube volume, plus c",
      residual,
      (Rational(1) / cube.volume()) * face_couple_about_cube_center(trunc, cube) +
          opts.body_couple));
  out.report.checks.push_back(detail::equality_check(
      "grad-tr.split", "grad tr sigma = Div(Diag sigma) + (24/L^2) axl(skew m)",
      grad(tr(sigma)), gsplit.div_diag + gsplit.axl_skew_term));

  out.exit_code = out.report.all_passed() ? 0 : 1;
  return out;
}

// ---------------------------------------------------------------------------
// scenario
// ---------------------------------------------------------------------------

inline CommandOutcome cmd_scenario_torsion(const TorsionParams& params) {
  CommandOutcome out;
  out.report.command = "scenario";
  if (params.alpha_bar.is_zero() || params.material.mu.is_zero()) {
    out.exit_code = 2;
    out.error = "scenario torsion: alpha_bar and mu must be nonzero";
    return out;
  }
  TorsionScenario s;
  try {
    s = torsion_scenario(params);
  } catch (const std::invalid_argument& e) {
    out.exit_code = 2;
    out.error = std::string("scenario torsion: ") + e.what();
    return out;
  }

  detail::Json res;
  res["name"] = "torsion";
  res["alpha_bar"] = params.alpha_bar.to_string();
  res["dx"] = params.dx.to_string();
  res["displacement"] = detail::to_json(s.displacement);
  res["stress"] = detail::to_json(s.stress);
  res["curvature"] = detail::to_json(s.curvature_at_origin);
  res["couple_stress_material"] = detail::to_json(s.couple_stress_material);
  res["couple_stress_from_faces"] = detail::to_json(s.couple_stress_from_faces);
  detail::Json couples = detail::Json::array();
  for (const Vec3& c : s.face_couples) couples.push_back(detail::to_json(c));
  res["face_couples"] = std::move(couples);
  res["couples_match"] = s.couples_match;
  res["match_condition"] = s.match_condition;
  res["family_coefficient"] = s.family_coefficient.to_string();
  out.report.results = std::move(res);

  out.report.checks.push_back(detail::predicate_check(
      "torsion.match-iff-length-condition",
      "face couples reproduce the material couple stress exactly when L_c^2 alpha1 = dx^2/12",
      s.couples_match == s.match_condition, s.couples_match ? "match" : "no match",
      s.match_condition ? "condition holds" : "condition fails"));
  out.report.checks.push_back(detail::equality_check(
      "torsion.family-inclusion",
      "the trace-free family at (0, 0, 12 alpha_bar mu alpha1) with L = L_c reproduces m",
      s.family_couple_stress, s.couple_stress_material));
  bool opposite = true;
  for (int f = 0; f < 3; ++f)
    if (!(s.face_couples[static_cast<std::size_t>(f + 3)] ==
          Rational(-1) * s.face_couples[static_cast<std::size_t>(f)]))
      opposite = false;
  out.report.checks.push_back(detail::predicate_check(
      "torsion.opposite-faces-flip", "opposite faces carry opposite couples", opposite));
  out.report.checks.push_back(detail::equality_check(
      "torsion.axial-couple-doubled-reversed",
      "the axial face couple is twice each lateral one with reversed sign",
      s.face_couples[2][2], Rational(-2) * s.face_couples[0][0]));

  out.exit_code = out.report.all_passed() ? 0 : 1;
  return out;
}

inline CommandOutcome cmd_scenario_trace_free(const TraceFreeFamilyParams& params) {
  CommandOutcome out;
  out.report.command = "scenario";
  TraceFreeFamilyResult r;
  try {
    r = trace_free_family(params);
  } catch (const std::invalid_argument& e) {
    out.exit_code = 2;
    out.error = std::string("scenario trace-free: ") + e.what();
    return out;
  }

  detail::Json res;
  res["name"] = "trace-free";
  res["a"] = params.a.to_string();
  res["b"] = params.b.to_string();
  res["c"] = params.c.to_string();
  res["L"] = params.L.to_string();
  res["sigma"] = detail::to_json(r.sigma);
  res["m_integral"] = detail::to_json(r.m_integral);
  res["m_closed"] = detail::to_json(r.m_closed);
  out.report.results = std::move(res);

  out.report.checks.push_back(detail::equality_check(
      "trace-free.integral-matches-closed-form",
      "face-couple integrals reproduce the closed-form diagonal couple stress", r.m_integral,
      r.m_closed));
  out.report.checks.push_back(detail::predicate_check(
      "trace-free.self-equilibrated", "the family is divergence free", div(r.sigma).is_zero()));
  out.report.checks.push_back(detail::predicate_check(
      "trace-free.symmetric-traceless", "the family is symmetric with zero trace",
      r.sigma == transpose(r.sigma) && tr(r.sigma).is_zero()));

  out.exit_code = out.report.all_passed() ? 0 : 1;
  return out;
}

inline CommandOutcome cmd_scenario_yang_cantilever(const Rational& ell, const Rational& couple) {
  CommandOutcome out;
  out.report.command = "scenario";
  const Vec3 tip{ell, Rational(0), Rational(0)};
  const Vec3 tip_couple{Rational(0), couple, Rational(0)};
  const Vec3 root_couple{Rational(0), -couple, Rational(0)};
  const std::vector<AppliedCouple> couples = {{tip, tip_couple}, {Vec3{}, root_couple}};
  const Vec3 sum = yang_third_balance(couples);
  const Vec3 root_term = yang_third_balance({{Vec3{}, root_couple}});

  detail::Json res;
  res["name"] = "yang-cantilever";
  res["length"] = ell.to_string();
  res["couple_magnitude"] = couple.to_string();
  res["position_weighted_sum"] = detail::to_json(sum);
  res["root_contribution"] = detail::to_json(root_term);
  res["couple_resultant"] = detail::to_json(tip_couple + root_couple);
  out.report.results = std::move(res);

  out.report.checks.push_back(detail::equality_check(
      "cantilever.position-weighted-sum", "sum x_i cross L_i = (0, 0, ell L)", sum,
      Vec3{Rational(0), Rational(0), ell * couple}));
  out.report.checks.push_back(detail::equality_check(
      "cantilever.anchored-at-origin", "the couple applied at the origin contributes nothing",
      root_term, Vec3{}));
  out.report.checks.push_back(detail::equality_check(
      "cantilever.equilibrated-couples", "the applied couples themselves sum to zero",
      tip_couple + root_couple, Vec3{}));
  out.exit_code = out.report.all_passed() ? 0 : 1;
  return out;
}

inline CommandOutcome cmd_scenario_yang_surface(std::uint64_t seed, int max_degree,
                                                const Cube& cube) {
  CommandOutcome out;
  if (max_degree < 0) {
    out.exit_code = 2;
    out.error = "scenario yang-surface: --max-degree must be non-negative";
    return out;
  }
  out.report.command = "scenario";
  out.report.seed = seed;
  XorShift64 rng(seed);
  const PolyMat3Field m = random_tensor_field(rng, max_degree);
  const SurfaceMomentIdentity r = yang_surface_identity(m, cube);
  const PolyVec3Field x = PolyVec3Field::position();
  const Vec3 div_moment = integrate_volume(cross(x, div(m)), cube);

  detail::Json res;
  res["name"] = "yang-surface";
  res["max_degree"] = max_degree;
  res["center"] = detail::to_json(cube.center);
  res["edge"] = cube.edge.to_string();
  res["surface_moment"] = detail::to_json(r.surface);
  res["volume_form"] = detail::to_json(r.volume);
  res["skew_only"] = detail::to_json(r.skew_only);
  res["divergence_moment_residual"] = detail::to_json(r.surface - r.skew_only);
  out.report.results = std::move(res);

  out.report.checks.push_back(detail::equality_check(
      "yang-surface.boundary-equals-volume",
      "sum_f int x cross (m n) dA = int (2 axl skew m + x cross Div m) dV", r.surface, r.volume));
  out.report.checks.push_back(detail::equality_check(
      "yang-surface.residual-is-divergence-moment",
      "the surface moment minus the skew term is the moment of Div m", r.surface - r.skew_only,
      div_moment));
  out.exit_code = out.report.all_passed() ? 0 : 1;
  return out;
}

inline CommandOutcome cmd_scenario_conformal(std::uint64_t seed, const IsotropicMaterial& mat) {
  CommandOutcome out;
  if (!(mat.L_c > Rational(0))) {
    out.exit_code = 2;
    out.error = "scenario conformal: L_c must be positive";
    return out;
  }
  out.report.command = "scenario";
  out.report.seed = seed;
  XorShift64 rng(seed);
  ConformalMapParams params;
  params.W_hat = random_antisymmetric(rng);
  params.A_hat = random_antisymmetric(rng);
  params.p_hat = random_coefficient(rng);
  params.b_hat = random_vec3(rng);
  const PolyVec3Field u = conformal_displacement(params);
  const Vec3 w = axl(params.W_hat);

  const PolyMat3Field k = curvature(u);
  const PolyMat3Field m_conf = couple_stress(k, mat, ModelKind::ModifiedConformal);
  const PolyMat3Field m_skew = couple_stress(k, mat, ModelKind::SkewOnly);
  const EnergyDensities e = energies(u, mat, ModelKind::Indeterminate);
  const EnergyDensities e_conf = energies(u, mat, ModelKind::ModifiedConformal);
  const PolyScalarField tr_grad = tr(grad(u));

  detail::Json res;
  res["name"] = "conformal";
  res["W_hat"] = detail::to_json(params.W_hat);
  res["A_hat"] = detail::to_json(params.A_hat);
  res["p_hat"] = params.p_hat.to_string();
  res["b_hat"] = detail::to_json(params.b_hat);
  res["displacement"] = detail::to_json(u);
  res["curvature"] = detail::to_json(k);
  res["couple_stress_skew_response"] = detail::to_json(m_skew);
  res["linear_energy"] = to_string(e.linear);
  res["curvature_energy"] = to_string(e.curvature);
  out.report.results = std::move(res);

  out.report.checks.push_back(detail::predicate_check(
      "conformal.dev-sym-grad-vanishes", "dev sym Grad u = 0 on conformal displacements",
      dev_sym(grad(u)).is_zero()));
  out.report.checks.push_back(detail::equality_check(
      "conformal.curvature-constant", "the curvature is the constant anti(axl W)", k,
      PolyMat3Field::constant(anti(w))));
  out.report.checks.push_back(detail::predicate_check(
      "conformal.dev-sym-response-vanishes",
      "with only the dev sym response the couple stress and curvature energy vanish",
      m_conf.is_zero() && e_conf.curvature.is_zero()));
  out.report.checks.push_back(detail::equality_check(
      "conformal.skew-response-constant",
      "the skew response is the constant 2 mu L_c^2 alpha2 anti(axl W)", m_skew,
      PolyMat3Field::constant(Rational(2) * mat.mu * mat.L_c * mat.L_c * mat.alpha2 * anti(w))));
  out.report.checks.push_back(detail::equality_check(
      "conformal.linear-energy-closed-form",
      "the strain energy is (3 lambda + 2 mu)/6 (tr Grad u)^2", e.linear,
      ((Rational(3) * mat.lambda + Rational(2) * mat.mu) / Rational(6)) * (tr_grad * tr_grad)));
  out.report.checks.push_back(detail::predicate_check(
      "conformal.energy-kernel",
      "the strain energy vanishes exactly when p_hat = 1 and axl W = 0",
      e.linear.is_zero() == (params.p_hat == Rational(1) && w.is_zero())));

  out.exit_code = out.report.all_passed() ? 0 : 1;
  return out;
}

}  // namespace polarity
