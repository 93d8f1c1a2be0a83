#pragma once

/// @file elasticity.hpp
/// Isotropic couple-stress constitutive models over exact polynomial
/// displacement fields: strain and curvature measures, the local and
/// nonlocal stress contributions, total-stress assembly for the model
/// variants, energy densities, conformal maps, and balance residuals.
///
/// Kinematics (u a polynomial displacement field):
///   eps   = sym Grad u                      (linear strain)
///   ktil  = 1/2 Grad curl u                 (second-order curvature, tr = 0)
///   khat  = Curl sym Grad u                 (symmetric-variant curvature)
/// Constitutive response:
///   sigma = 2 mu eps + lambda tr(eps) 1
///   m     = 2 mu L_c^2 (alpha1 dev sym k + alpha2 skew k)
///   tau   = -1/2 anti(Div m)                (skew nonlocal stress)
///   sigma_tilde = sigma + tau               (total stress, standard route)
///   sigma_hat   = sigma + sym Curl m_hat    (symmetric total-stress variant)
/// The spherical weight alpha3 never enters: both curvature measures are
/// trace free, and couple_stress() rejects arguments that are not.

#include <stdexcept>
#include <utility>

#include "polarity/field.hpp"
#include "polarity/rational.hpp"
#include "polarity/tensor.hpp"

namespace polarity {

struct IsotropicMaterial {
  Rational mu;      ///< shear modulus
  Rational lambda;  ///< first Lame parameter
  Rational L_c;     ///< characteristic length, > 0
  Rational alpha1;  ///< weight of dev sym curvature
  Rational alpha2;  ///< weight of skew curvature
  Rational alpha3;  ///< spherical weight; inert on trace-free curvature
};

/// Which couple-stress response (and total-stress assembly) to use.
enum class ModelKind {
  Indeterminate,     ///< both curvature weights active
  ModifiedConformal, ///< alpha2 = 0: only dev sym curvature responds
  SkewOnly,          ///< alpha1 = 0: only skew curvature responds
  SymmetricTotal     ///< khat curvature, sym Curl m closes a symmetric total stress
};

inline const char* to_string(ModelKind k) {
  switch (k) {
    case ModelKind::Indeterminate: return "indeterminate";
    case ModelKind::ModifiedConformal: return "modified-conformal";
    case ModelKind::SkewOnly: return "skew-only";
    case ModelKind::SymmetricTotal: return "symmetric-total";
  }
  return "?";
}

/// The (alpha1, alpha2) pair actually applied under a model kind.
inline std::pair<Rational, Rational> effective_weights(const IsotropicMaterial& mat, ModelKind kind) {
  switch (kind) {
    case ModelKind::ModifiedConformal: return {mat.alpha1, Rational(0)};
    case ModelKind::SkewOnly: return {Rational(0), mat.alpha2};
    default: return {mat.alpha1, mat.alpha2};
  }
}

inline PolyMat3Field strain(const PolyVec3Field& u) { return sym(grad(u)); }

/// Linear isotropic stress of a symmetric strain field.
inline PolyMat3Field local_stress(const PolyMat3Field& eps, const IsotropicMaterial& mat) {
  if (!(eps == transpose(eps))) throw std::invalid_argument("local_stress: strain must be symmetric");
  return Rational(2) * mat.mu * eps + (mat.lambda * tr(eps)) * identity_field();
}

/// ktil = 1/2 Grad curl u; trace-free because div curl vanishes.
inline PolyMat3Field curvature(const PolyVec3Field& u) { return Rational(1, 2) * grad(curl(u)); }

/// khat = Curl sym Grad u, the curvature of the symmetric total-stress
/// variant; equals the transpose of ktil, hence also trace free.
inline PolyMat3Field curvature_symmetric_variant(const PolyVec3Field& u) {
  return curl(sym(grad(u)));
}

/// m = 2 mu L_c^2 (alpha1 dev sym k + alpha2 skew k) with the weights set by
/// the model kind. Only trace-free curvature is accepted, so the spherical
/// alpha3 term contributes nothing and is omitted.
inline PolyMat3Field couple_stress(const PolyMat3Field& k, const IsotropicMaterial& mat,
                                   ModelKind kind) {
  if (!tr(k).is_zero()) throw std::invalid_argument("couple_stress: curvature must be trace free");
  if (!(mat.L_c > Rational(0))) throw std::invalid_argument("couple_stress: L_c must be positive");
  const auto [a1, a2] = effective_weights(mat, kind);
  const Rational scale = Rational(2) * mat.mu * mat.L_c * mat.L_c;
  return scale * (a1 * dev_sym(k) + a2 * skew(k));
}

/// tau = -1/2 anti(Div m), the skew stress induced by couple-stress
/// gradients; Div m + 2 axl tau = 0 holds identically by construction.
inline PolyMat3Field nonlocal_stress(const PolyMat3Field& m) {
  return Rational(-1, 2) * anti(div(m));
}

/// Total stress of a displacement field under a model kind. The first three
/// kinds add the skew nonlocal stress; SymmetricTotal instead adds
/// sym Curl m_hat, which keeps the total symmetric while preserving its
/// divergence (the two assemblies differ by a divergence-free field).
inline PolyMat3Field total_stress(const PolyVec3Field& u, ModelKind kind,
                                  const IsotropicMaterial& mat) {
  const PolyMat3Field sigma = local_stress(strain(u), mat);
  if (kind == ModelKind::SymmetricTotal) {
    const PolyMat3Field m_hat = couple_stress(curvature_symmetric_variant(u), mat, kind);
    return sigma + sym(curl(m_hat));
  }
  const PolyMat3Field m = couple_stress(curvature(u), mat, kind);
  return sigma + nonlocal_stress(m);
}

struct EnergyDensities {
  PolyScalarField linear;     ///< mu |eps|^2 + lambda/2 tr(eps)^2
  PolyScalarField curvature;  ///< mu L_c^2 (alpha1 |dev sym k|^2 + alpha2 |skew k|^2)
};

inline EnergyDensities energies(const PolyVec3Field& u, const IsotropicMaterial& mat,
                                ModelKind kind) {
  EnergyDensities e;
  const PolyMat3Field eps = strain(u);
  const PolyScalarField tr_eps = tr(eps);
  e.linear = mat.mu * norm_sq(eps) + (mat.lambda * Rational(1, 2)) * (tr_eps * tr_eps);
  const PolyMat3Field k =
      (kind == ModelKind::SymmetricTotal) ? curvature_symmetric_variant(u) : curvature(u);
  const auto [a1, a2] = effective_weights(mat, kind);
  e.curvature =
      mat.mu * mat.L_c * mat.L_c * (a1 * norm_sq(dev_sym(k)) + a2 * norm_sq(skew(k)));
  return e;
}

/// Parameters of the conformal map
///   phi(x) = 1/2 (2 <w,x> x - w |x|^2) + (p 1 + A) x + b,   w = axl(W),
/// with W and A antisymmetric. Its displacement u = phi - x has identically
/// vanishing dev sym gradient, so it exhausts the curvature-energy kernel of
/// the modified-conformal model.
struct ConformalMapParams {
  Mat3 W_hat;  ///< antisymmetric: generator of the special conformal part
  Mat3 A_hat;  ///< antisymmetric: infinitesimal rotation
  Rational p_hat;  ///< uniform dilation factor
  Vec3 b_hat;  ///< translation
};

inline PolyVec3Field conformal_map(const ConformalMapParams& params) {
  if (!is_antisymmetric(params.W_hat))
    throw std::invalid_argument("conformal_map: W_hat must be antisymmetric");
  if (!is_antisymmetric(params.A_hat))
    throw std::invalid_argument("conformal_map: A_hat must be antisymmetric");
  const Vec3 w = axl(params.W_hat);
  const PolyVec3Field x = PolyVec3Field::position();
  const PolyVec3Field w_field = PolyVec3Field::constant(w);
  const PolyScalarField wx = dot(w_field, x);
  const PolyScalarField xx = dot(x, x);
  const PolyVec3Field quadratic =
      Rational(1, 2) * (Rational(2) * (wx * x) - xx * w_field);
  Mat3 affine = params.A_hat;
  for (int i = 0; i < 3; ++i) affine(i, i) = affine(i, i) + params.p_hat;
  return quadratic + PolyMat3Field::constant(affine) * x + PolyVec3Field::constant(params.b_hat);
}

/// u = phi - x, the displacement carried by a conformal map.
inline PolyVec3Field conformal_displacement(const ConformalMapParams& params) {
  return conformal_map(params) - PolyVec3Field::position();
}

struct BalanceResiduals {
  PolyVec3Field linear;   ///< Div(total stress) + f
  PolyVec3Field angular;  ///< moment balance; identically the couple residual
};

/// Pointwise balance residuals for body force f and body couple c. For the
/// standard kinds the angular residual is Div m + 2 axl skew(total) + c; for
/// SymmetricTotal the total stress is symmetric, so the couple-stress
/// machinery drops out and the residual is 2 axl skew(total) + c.
inline BalanceResiduals balance_residuals(const PolyVec3Field& u, const PolyVec3Field& f,
                                          const Vec3& c, const IsotropicMaterial& mat,
                                          ModelKind kind) {
  BalanceResiduals r;
  const PolyMat3Field total = total_stress(u, kind, mat);
  r.linear = div(total) + f;
  const PolyVec3Field c_field = PolyVec3Field::constant(c);
  if (kind == ModelKind::SymmetricTotal) {
    r.angular = Rational(2) * axl_skew(total) + c_field;
    return r;
  }
  const PolyMat3Field m = couple_stress(curvature(u), mat, kind);
  r.angular = div(m) + Rational(2) * axl_skew(total) + c_field;
  return r;
}

}  // namespace polarity
