#pragma once

/// @file checks.hpp
/// The identity-check registry behind `polarity verify`: each entry names
/// one exact identity of the calculus (by content, in its anchor string)
/// and proves it on seeded random inputs. A check fails by exhibiting the
/// first counterexample, printed exactly.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polarity/cube.hpp"
#include "polarity/elasticity.hpp"
#include "polarity/field.hpp"
#include "polarity/random_fields.hpp"
#include "polarity/rational.hpp"
#include "polarity/report.hpp"
#include "polarity/taylor.hpp"
#include "polarity/tensor.hpp"

namespace polarity {

struct IdentityCheck {
  std::string id;
  std::string anchor;
  /// Runs `trials` draws at polynomial degree <= max_degree.
  std::function<CheckResult(XorShift64&, int, int)> run;
};

namespace detail {

/// A trial returns nullopt on success or the (lhs, rhs) counterexample.
using TrialOutcome = std::optional<std::pair<std::string, std::string>>;

template <typename Fn>
IdentityCheck make_check(std::string id, std::string anchor, Fn body) {
  auto run = [id, anchor, body](XorShift64& rng, int trials, int max_degree) -> CheckResult {
    for (int t = 0; t < trials; ++t) {
      TrialOutcome bad = body(rng, max_degree);
      if (bad)
        return check_fail(id, anchor, bad->first, bad->second,
                          "counterexample at trial " + std::to_string(t));
    }
    return check_pass(id, anchor, std::to_string(trials) + " trials");
  };
  return IdentityCheck{std::move(id), std::move(anchor), std::move(run)};
}

template <typename T>
TrialOutcome expect_equal(const T& lhs, const T& rhs) {
  if (lhs == rhs) return std::nullopt;
  return std::make_pair(to_string(lhs), to_string(rhs));
}

inline TrialOutcome expect_zero_field(const PolyMat3Field& f) {
  if (f.is_zero()) return std::nullopt;
  return std::make_pair(to_string(f), std::string("0"));
}

inline Rational random_positive(XorShift64& rng) {
  const int num = 1 + static_cast<int>(rng.next() % 3);
  const int den = 1 + static_cast<int>(rng.next() % 2);
  return Rational(num, den);
}

inline Cube random_cube(XorShift64& rng) { return Cube{random_vec3(rng), random_positive(rng)}; }

inline IsotropicMaterial random_material(XorShift64& rng) {
  IsotropicMaterial m;
  m.mu = random_positive(rng);
  m.lambda = random_coefficient(rng);
  m.L_c = random_positive(rng);
  m.alpha1 = random_coefficient(rng);
  m.alpha2 = random_coefficient(rng);
  m.alpha3 = random_coefficient(rng);
  return m;
}

inline ConformalMapParams random_conformal_params(XorShift64& rng) {
  ConformalMapParams p;
  p.W_hat = random_antisymmetric(rng);
  p.A_hat = random_antisymmetric(rng);
  p.p_hat = random_coefficient(rng);
  p.b_hat = random_vec3(rng);
  return p;
}

}  // namespace detail

/// All registered identity checks, in registration order. `polarity verify`
/// runs them in this order against one seed-threaded random stream, so the
/// full run is reproducible from the seed alone.
inline const std::vector<IdentityCheck>& identity_checks() {
  using detail::make_check;
  using detail::TrialOutcome;
  static const std::vector<IdentityCheck> checks = [] {
    std::vector<IdentityCheck> v;

    v.push_back(make_check(
        "axl.anti-roundtrip", "axl(anti(a)) = a and anti(a) is antisymmetric",
        [](XorShift64& rng, int) -> TrialOutcome {
          const Vec3 a = random_vec3(rng);
          const Mat3 m = anti(a);
          if (!is_antisymmetric(m)) return std::make_pair(to_string(m), std::string("antisymmetric"));
          return detail::expect_equal(axl(m), a);
        }));

    v.push_back(make_check(
        "anti.action-is-cross", "anti(a) b = a x b",
        [](XorShift64& rng, int) -> TrialOutcome {
          const Vec3 a = random_vec3(rng);
          const Vec3 b = random_vec3(rng);
          return detail::expect_equal(anti(a) * b, cross(a, b));
        }));

    v.push_back(make_check(
        "cross.epsilon-contraction", "(a x b)_k = a_i b_j eps_ijk",
        [](XorShift64& rng, int) -> TrialOutcome {
          const Vec3 a = random_vec3(rng);
          const Vec3 b = random_vec3(rng);
          Vec3 byeps;
          for (int k = 0; k < 3; ++k) {
            Rational s;
            for (int i = 0; i < 3; ++i)
              for (int j = 0; j < 3; ++j) s = s + a[i] * b[j] * Rational(levi_civita(i, j, k));
            byeps[k] = s;
          }
          return detail::expect_equal(cross(a, b), byeps);
        }));

    v.push_back(make_check(
        "decompose.orthogonal-parts",
        "M = dev sym M + skew M + sph M with pairwise orthogonal parts",
        [](XorShift64& rng, int) -> TrialOutcome {
          const Mat3 m = random_mat3(rng);
          const TensorSplit s = decompose(m);
          TrialOutcome bad = detail::expect_equal(s.dev_sym + s.skew + s.sph, m);
          if (bad) return bad;
          const Rational z;
          if (!(inner(s.dev_sym, s.skew) == z && inner(s.dev_sym, s.sph) == z &&
                inner(s.skew, s.sph) == z))
            return std::make_pair(std::string("nonzero cross inner product"), std::string("0"));
          return std::nullopt;
        }));

    v.push_back(make_check(
        "rotation.proper-orthogonal", "quaternion rotations satisfy Q^T Q = 1, det Q = 1",
        [](XorShift64& rng, int) -> TrialOutcome {
          const Mat3 q = random_rotation(rng);
          if (!is_rotation(q)) return std::make_pair(to_string(q), std::string("a proper rotation"));
          return detail::expect_equal(transpose(q) * q, Mat3::identity());
        }));

    v.push_back(make_check(
        "curl.grad-vanishes", "curl grad f = 0",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyScalarField f = random_scalar_field(rng, max_degree);
          const PolyVec3Field c = curl(grad(f));
          if (!c.is_zero()) return std::make_pair(to_string(c), std::string("0"));
          return std::nullopt;
        }));

    v.push_back(make_check(
        "div.curl-vanishes", "div curl v = 0",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyVec3Field u = random_vector_field(rng, max_degree);
          const PolyScalarField d = div(curl(u));
          if (!d.is_zero()) return std::make_pair(to_string(d), std::string("0"));
          return std::nullopt;
        }));

    v.push_back(make_check(
        "curl.two-axl-skew-grad", "curl v = 2 axl(skew Grad v)",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyVec3Field u = random_vector_field(rng, max_degree);
          return detail::expect_equal(curl(u), Rational(2) * axl_skew(grad(u)));
        }));

    v.push_back(make_check(
        "curl.curl-decomposition", "curl curl v = grad div v - Lap v",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyVec3Field u = random_vector_field(rng, max_degree);
          return detail::expect_equal(curl(curl(u)), grad(div(u)) - laplacian(u));
        }));

    v.push_back(make_check(
        "grad.leibniz", "grad(f g) = f grad g + g grad f",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyScalarField f = random_scalar_field(rng, max_degree);
          const PolyScalarField g = random_scalar_field(rng, max_degree);
          return detail::expect_equal(grad(f * g), f * grad(g) + g * grad(f));
        }));

    v.push_back(make_check(
        "cube.divergence-theorem", "sum_f int sigma n dA = int Div sigma dV",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyMat3Field sigma = random_tensor_field(rng, max_degree);
          const Cube cube = detail::random_cube(rng);
          return detail::expect_equal(face_traction_sum(sigma, cube),
                                      integrate_volume(div(sigma), cube));
        }));

    v.push_back(make_check(
        "cube.boundary-moment-identity",
        "sum_f int x cross (A n) dA = int (2 axl skew A + x cross Div A) dV",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyMat3Field a = random_tensor_field(rng, max_degree);
          const Cube cube = detail::random_cube(rng);
          const DivergenceCrossCheck c = divergence_theorem_cross_check(a, cube);
          return detail::expect_equal(c.lhs, c.rhs);
        }));

    v.push_back(make_check(
        "cube.moment-transport",
        "moment about the center = sum_f [face-center couple + (c_f - x0) cross face force]",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyMat3Field sigma = random_tensor_field(rng, max_degree);
          const Cube cube = detail::random_cube(rng);
          Vec3 transported;
          for (int f = 0; f < kFaceCount; ++f) {
            const Vec3 local = face_couple_about_face_center(sigma, cube, f);
            const Vec3 force = integrate_face(traction_field(sigma, f), cube, f);
            transported = transported + local + cross(face_center(cube, f) - cube.center, force);
          }
          return detail::expect_equal(face_couple_about_cube_center(sigma, cube), transported);
        }));

    v.push_back(make_check(
        "taylor.reconstructs-low-degree", "degree <= 2 fields equal their expansion",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const int d = max_degree < 2 ? max_degree : 2;
          const PolyMat3Field sigma = random_tensor_field(rng, d);
          const Vec3 x0 = random_vec3(rng);
          const TaylorDecomposition t = expand(sigma, x0, detail::random_positive(rng));
          return detail::expect_equal(reconstruct(t), sigma);
        }));

    v.push_back(make_check(
        "taylor.pieces-partition",
        "constant + np + p1 + p2 + b1 + b2 + q partitions the truncated field",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyMat3Field sigma = random_tensor_field(rng, max_degree);
          const Vec3 x0 = random_vec3(rng);
          const TaylorDecomposition t = expand(sigma, x0, detail::random_positive(rng));
          const LinearSplit lin = split_linear(t);
          const BilinearSplit bil = split_bilinear(t);
          const PolyMat3Field sum = constant_piece(t) + lin.np + lin.p1 + lin.p2 + bil.b1 +
                                    bil.b2 + quadratic_piece(t);
          return detail::expect_equal(sum, reconstruct(t));
        }));

    v.push_back(make_check(
        "couple-stress.p2-face-couples",
        "column i of m, times the face area, is the face-i couple of the p2 piece "
        "(opposite faces flip the sign)",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyMat3Field sigma = random_tensor_field(rng, max_degree);
          const Cube cube = detail::random_cube(rng);
          const TaylorDecomposition t = expand(sigma, cube.center, cube.edge);
          const Mat3 m = couple_stress_from_gradients(t);
          const PolyMat3Field p2 = split_linear(t).p2;
          const Rational area = cube.edge * cube.edge;
          for (int f = 0; f < kFaceCount; ++f) {
            const Vec3 couple = face_couple_about_face_center(p2, cube, f);
            const Rational orient(face_orientation(f));
            const Vec3 predicted = (orient * area) * m.col(face_axis(f));
            if (!(couple == predicted))
              return std::make_pair(to_string(couple), to_string(predicted));
          }
          return std::nullopt;
        }));

    v.push_back(make_check(
        "couple-stress.trace-free-on-symmetric", "tr m = 0 whenever sigma is symmetric",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyMat3Field sigma = random_symmetric_tensor_field(rng, max_degree);
          const PolyScalarField trace = tr(couple_stress_field(sigma, detail::random_positive(rng)));
          if (!trace.is_zero()) return std::make_pair(to_string(trace), std::string("0"));
          return std::nullopt;
        }));

    v.push_back(make_check(
        "couple-stress.point-field-agreement",
        "the gradient formula at x0 equals the couple-stress field evaluated there",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyMat3Field sigma = random_tensor_field(rng, max_degree);
          const Vec3 x0 = random_vec3(rng);
          const Rational l = detail::random_positive(rng);
          return detail::expect_equal(couple_stress_from_gradients(expand(sigma, x0, l)),
                                      couple_stress_field(sigma, l).evaluate(x0));
        }));

    v.push_back(make_check(
        "grad-tr.split", "grad tr sigma = Div(Diag sigma) + (24/L^2) axl(skew m)",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyMat3Field sigma = random_tensor_field(rng, max_degree);
          const Rational l = detail::random_positive(rng);
          const GradTrSplit s = grad_tr_decomposition(sigma, l);
          return detail::expect_equal(grad(tr(sigma)), s.div_diag + s.axl_skew_term);
        }));

    v.push_back(make_check(
        "psi.vanishes-on-symmetric", "psi = 0 whenever sigma is symmetric",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyMat3Field sigma = random_symmetric_tensor_field(rng, max_degree);
          return detail::expect_zero_field(psi(sigma, detail::random_positive(rng)));
        }));

    v.push_back(make_check(
        "chi.rotation-objectivity",
        "chi of the field rotated by a cube symmetry is the conjugated chi",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyMat3Field sigma = random_tensor_field(rng, max_degree);
          const Mat3 q = random_cube_rotation(rng);
          const Vec3 x0 = random_vec3(rng);
          const Rational l = detail::random_positive(rng);
          const Mat3 lhs = chi(pushforward_rotation(sigma, q), q * x0, l);
          const Mat3 rhs = q * chi(sigma, x0, l) * transpose(q);
          return detail::expect_equal(lhs, rhs);
        }));

    v.push_back(make_check(
        "angular-balance.two-routes",
        "Div m + Div psi + 2 axl skew(sigma0 + chi) + c equals the boundary moment "
        "of the truncated field over the cube volume, plus c",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyMat3Field sigma = random_tensor_field(rng, max_degree);
          const Cube cube = detail::random_cube(rng);
          const Vec3 c = random_vec3(rng);
          const Vec3 lhs = angular_balance_residual(sigma, cube, c);
          const PolyMat3Field trunc = reconstruct(expand(sigma, cube.center, cube.edge));
          const Vec3 rhs =
              (Rational(1) / cube.volume()) * face_couple_about_cube_center(trunc, cube) + c;
          return detail::expect_equal(lhs, rhs);
        }));

    v.push_back(make_check(
        "curvature.trace-free", "tr(1/2 Grad curl u) = 0",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyVec3Field u = random_vector_field(rng, max_degree);
          const PolyScalarField trace = tr(curvature(u));
          if (!trace.is_zero()) return std::make_pair(to_string(trace), std::string("0"));
          return std::nullopt;
        }));

    v.push_back(make_check(
        "curvature.variant-is-transpose", "Curl(sym Grad u) = (1/2 Grad curl u)^T",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyVec3Field u = random_vector_field(rng, max_degree);
          return detail::expect_equal(curvature_symmetric_variant(u), transpose(curvature(u)));
        }));

    v.push_back(make_check(
        "structural.div-m-plus-two-axl-tau", "Div m + 2 axl(-1/2 anti Div m) = 0 for any m",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyMat3Field m = random_tensor_field(rng, max_degree);
          const PolyVec3Field resid = div(m) + Rational(2) * axl_skew(nonlocal_stress(m));
          if (!resid.is_zero()) return std::make_pair(to_string(resid), std::string("0"));
          return std::nullopt;
        }));

    v.push_back(make_check(
        "variant.same-divergence",
        "the skew-assembled and symmetric-assembled total stresses share their divergence",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyVec3Field u = random_vector_field(rng, max_degree);
          const IsotropicMaterial mat = detail::random_material(rng);
          const PolyVec3Field lhs = div(total_stress(u, ModelKind::Indeterminate, mat));
          const PolyVec3Field rhs = div(total_stress(u, ModelKind::SymmetricTotal, mat));
          return detail::expect_equal(lhs, rhs);
        }));

    v.push_back(make_check(
        "variant.symmetric-total",
        "the symmetric-variant total stress is symmetric and its couple stress is trace free",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyVec3Field u = random_vector_field(rng, max_degree);
          const IsotropicMaterial mat = detail::random_material(rng);
          const PolyMat3Field total = total_stress(u, ModelKind::SymmetricTotal, mat);
          TrialOutcome bad = detail::expect_equal(total, transpose(total));
          if (bad) return bad;
          const PolyScalarField trace = tr(couple_stress(
              curvature_symmetric_variant(u), mat, ModelKind::SymmetricTotal));
          if (!trace.is_zero()) return std::make_pair(to_string(trace), std::string("0"));
          return std::nullopt;
        }));

    v.push_back(make_check(
        "conformal.curvature-constant",
        "conformal displacements have dev sym Grad u = 0 and curvature anti(axl W)",
        [](XorShift64& rng, int) -> TrialOutcome {
          const ConformalMapParams p = detail::random_conformal_params(rng);
          const PolyVec3Field u = conformal_displacement(p);
          TrialOutcome bad = detail::expect_zero_field(dev_sym(grad(u)));
          if (bad) return bad;
          return detail::expect_equal(curvature(u),
                                      PolyMat3Field::constant(anti(axl(p.W_hat))));
        }));

    v.push_back(make_check(
        "conformal.annihilated-by-dev-sym-response",
        "with only the dev sym curvature term active, conformal displacements "
        "carry zero couple stress and zero curvature energy",
        [](XorShift64& rng, int) -> TrialOutcome {
          const ConformalMapParams p = detail::random_conformal_params(rng);
          const PolyVec3Field u = conformal_displacement(p);
          IsotropicMaterial mat = detail::random_material(rng);
          const PolyMat3Field m = couple_stress(curvature(u), mat, ModelKind::ModifiedConformal);
          TrialOutcome bad = detail::expect_zero_field(m);
          if (bad) return bad;
          const PolyScalarField w = energies(u, mat, ModelKind::ModifiedConformal).curvature;
          if (!w.is_zero()) return std::make_pair(to_string(w), std::string("0"));
          return std::nullopt;
        }));

    v.push_back(make_check(
        "conformal.linear-energy-closed-form",
        "on conformal displacements the strain energy is (3 lambda + 2 mu)/6 (tr Grad u)^2",
        [](XorShift64& rng, int) -> TrialOutcome {
          const ConformalMapParams p = detail::random_conformal_params(rng);
          const PolyVec3Field u = conformal_displacement(p);
          IsotropicMaterial mat = detail::random_material(rng);
          const PolyScalarField lhs = energies(u, mat, ModelKind::Indeterminate).linear;
          const PolyScalarField trace = tr(grad(u));
          const PolyScalarField rhs =
              ((Rational(3) * mat.lambda + Rational(2) * mat.mu) / Rational(6)) * (trace * trace);
          return detail::expect_equal(lhs, rhs);
        }));

    v.push_back(make_check(
        "pushforward.inverse-roundtrip", "rotating by Q then Q^T returns the field",
        [](XorShift64& rng, int max_degree) -> TrialOutcome {
          const PolyMat3Field sigma = random_tensor_field(rng, max_degree);
          const Mat3 q = random_rotation(rng);
          return detail::expect_equal(
              pushforward_rotation(pushforward_rotation(sigma, q), transpose(q)), sigma);
        }));

    return v;
  }();
  return checks;
}

}  // namespace polarity
