// Linear isotropic elasticity with couple stresses: kinematics, constitutive
// response under the four model kinds, energy densities, conformal maps, and
// the pointwise balance residuals. Oracles are hand-computed on the classic
// torsion field and on explicit conformal parameter sets.

#include "polarity/elasticity.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "polarity/field.hpp"
#include "polarity/tensor.hpp"

namespace polarity {
namespace {

PolyScalarField x1() { return PolyScalarField::variable(0); }
PolyScalarField x2() { return PolyScalarField::variable(1); }
PolyScalarField x3() { return PolyScalarField::variable(2); }

IsotropicMaterial sample_material() {
  return IsotropicMaterial{Rational(3), Rational(2), Rational(1), Rational(1, 12), Rational(1),
                           Rational(0)};
}

// Torsion about e3 with rate 2: u = (-2 x2 x3, 2 x1 x3, 0).
PolyVec3Field torsion_displacement() {
  return PolyVec3Field{Rational(-2) * (x2() * x3()), Rational(2) * (x1() * x3()),
                       PolyScalarField{}};
}

// A generic cubic displacement for identity checks.
PolyVec3Field cubic_displacement() {
  return PolyVec3Field{x1() * x2() * x3() + Rational(2) * (x2() * x2()),
                       x3() * x3() * x3() - x1() * x2(),
                       Rational(1, 2) * (x1() * x1() * x2()) + x3()};
}

TEST(Weights, PerModelKind) {
  const IsotropicMaterial mat = sample_material();
  EXPECT_EQ(effective_weights(mat, ModelKind::Indeterminate),
            std::make_pair(Rational(1, 12), Rational(1)));
  EXPECT_EQ(effective_weights(mat, ModelKind::ModifiedConformal),
            std::make_pair(Rational(1, 12), Rational(0)));
  EXPECT_EQ(effective_weights(mat, ModelKind::SkewOnly), std::make_pair(Rational(0), Rational(1)));
  EXPECT_EQ(effective_weights(mat, ModelKind::SymmetricTotal),
            std::make_pair(Rational(1, 12), Rational(1)));
}

TEST(Kinematics, TorsionStrainStressCurvature) {
  const IsotropicMaterial mat = sample_material();
  const PolyVec3Field u = torsion_displacement();

  PolyMat3Field eps_expected;
  eps_expected(0, 2) = Rational(-1) * x2();
  eps_expected(2, 0) = Rational(-1) * x2();
  eps_expected(1, 2) = x1();
  eps_expected(2, 1) = x1();
  const PolyMat3Field eps = strain(u);
  EXPECT_EQ(eps, eps_expected);
  EXPECT_TRUE(tr(eps).is_zero());

  // sigma = 2 mu eps since the strain is traceless.
  EXPECT_EQ(local_stress(eps, mat), Rational(6) * eps_expected);

  // Curvature diag(-1, -1, 2): half the torsion rate on the lateral axes,
  // the full rate doubled on the axis of twist.
  const PolyMat3Field k = curvature(u);
  EXPECT_EQ(k, PolyMat3Field::constant(
                   Mat3::diagonal(Rational(-1), Rational(-1), Rational(2))));
  EXPECT_TRUE(tr(k).is_zero());

  // m = 2 mu L_c^2 alpha1 k for this symmetric traceless curvature.
  EXPECT_EQ(couple_stress(k, mat, ModelKind::Indeterminate),
            PolyMat3Field::constant(
                Mat3::diagonal(Rational(-1, 2), Rational(-1, 2), Rational(1))));
}

TEST(Kinematics, CurvatureIsAlwaysTraceFree) {
  EXPECT_TRUE(tr(curvature(cubic_displacement())).is_zero());
  EXPECT_TRUE(tr(curvature_symmetric_variant(cubic_displacement())).is_zero());
}

TEST(Kinematics, VariantCurvatureIsTheTranspose) {
  const PolyVec3Field u = cubic_displacement();
  EXPECT_EQ(curvature_symmetric_variant(u), transpose(curvature(u)));
}

TEST(Constitutive, RejectsBadInputs) {
  const IsotropicMaterial mat = sample_material();
  PolyMat3Field nonsym;
  nonsym(0, 1) = x1();
  EXPECT_THROW(local_stress(nonsym, mat), std::invalid_argument);

  EXPECT_THROW(couple_stress(identity_field(), mat, ModelKind::Indeterminate),
               std::invalid_argument);

  IsotropicMaterial degenerate = mat;
  degenerate.L_c = Rational(0);
  EXPECT_THROW(couple_stress(curvature(torsion_displacement()), degenerate,
                             ModelKind::Indeterminate),
               std::invalid_argument);
}

TEST(Constitutive, NonlocalStressPairsWithCoupleStressDivergence) {
  const IsotropicMaterial mat = sample_material();
  const PolyMat3Field m =
      couple_stress(curvature(cubic_displacement()), mat, ModelKind::Indeterminate);
  const PolyMat3Field tau = nonlocal_stress(m);
  EXPECT_EQ(tau, Rational(-1) * transpose(tau));
  EXPECT_TRUE((div(m) + Rational(2) * axl_skew(tau)).is_zero());
}

TEST(Constitutive, TotalStressSkewPartIsTheNonlocalStress) {
  const IsotropicMaterial mat = sample_material();
  const PolyVec3Field u = cubic_displacement();
  const PolyMat3Field total = total_stress(u, ModelKind::Indeterminate, mat);
  const PolyMat3Field m = couple_stress(curvature(u), mat, ModelKind::Indeterminate);
  EXPECT_EQ(skew(total), nonlocal_stress(m));
}

TEST(Energies, TorsionClosedForms) {
  const IsotropicMaterial mat = sample_material();
  const EnergyDensities e = energies(torsion_displacement(), mat, ModelKind::Indeterminate);
  // W_lin = mu alpha_bar^2 / 2 (x1^2 + x2^2) with mu = 3, alpha_bar = 2.
  EXPECT_EQ(e.linear, Rational(6) * (x1() * x1() + x2() * x2()));
  // W_curv = mu L_c^2 alpha1 (3/2) alpha_bar^2 = 3/2, a constant density.
  EXPECT_EQ(e.curvature, PolyScalarField::constant(Rational(3, 2)));
}

TEST(Balance, AngularResidualReducesToBodyCouple) {
  const IsotropicMaterial mat = sample_material();
  const PolyVec3Field u = cubic_displacement();
  const PolyVec3Field f;
  const Vec3 c{Rational(1), Rational(-2), Rational(1, 3)};
  for (ModelKind kind : {ModelKind::Indeterminate, ModelKind::ModifiedConformal,
                         ModelKind::SkewOnly, ModelKind::SymmetricTotal}) {
    const BalanceResiduals r = balance_residuals(u, f, c, mat, kind);
    EXPECT_EQ(r.angular, PolyVec3Field::constant(c)) << to_string(kind);
  }
}

TEST(Balance, LinearResidualVanishesForMatchingBodyForce) {
  const IsotropicMaterial mat = sample_material();
  const PolyVec3Field u = cubic_displacement();
  const PolyVec3Field f = Rational(-1) * div(total_stress(u, ModelKind::SkewOnly, mat));
  EXPECT_TRUE(balance_residuals(u, f, Vec3{}, mat, ModelKind::SkewOnly).linear.is_zero());
}

TEST(SymmetricVariant, ClosesASymmetricTotalWithTheSameDivergence) {
  const IsotropicMaterial mat = sample_material();
  const PolyVec3Field u = cubic_displacement();

  const PolyMat3Field m_hat =
      couple_stress(curvature_symmetric_variant(u), mat, ModelKind::SymmetricTotal);
  EXPECT_TRUE(tr(m_hat).is_zero());

  const PolyMat3Field sigma_hat = total_stress(u, ModelKind::SymmetricTotal, mat);
  EXPECT_EQ(sigma_hat, transpose(sigma_hat));

  const PolyMat3Field sigma_tilde = total_stress(u, ModelKind::Indeterminate, mat);
  EXPECT_TRUE(div(sigma_tilde - sigma_hat).is_zero());
}

TEST(Conformal, MapShapeAndGuards) {
  ConformalMapParams p;
  p.W_hat = anti(Vec3{Rational(0), Rational(0), Rational(1)});
  p.A_hat = Mat3{};
  p.p_hat = Rational(1);
  p.b_hat = Vec3{};
  const PolyVec3Field u = conformal_displacement(p);
  EXPECT_EQ(u[0], x1() * x3());
  EXPECT_EQ(u[1], x2() * x3());
  EXPECT_EQ(u[2], Rational(1, 2) * (x3() * x3() - x1() * x1() - x2() * x2()));

  ConformalMapParams bad = p;
  bad.W_hat(0, 0) = Rational(1);
  EXPECT_THROW(conformal_map(bad), std::invalid_argument);
  bad = p;
  bad.A_hat(0, 1) = Rational(1);  // not matched by -1 at (1, 0)
  EXPECT_THROW(conformal_map(bad), std::invalid_argument);
}

ConformalMapParams generic_conformal() {
  ConformalMapParams p;
  p.W_hat = anti(Vec3{Rational(1), Rational(-2), Rational(1, 2)});
  p.A_hat = anti(Vec3{Rational(0), Rational(3), Rational(-1)});
  p.p_hat = Rational(3);
  p.b_hat = Vec3{Rational(1), Rational(1), Rational(-5)};
  return p;
}

TEST(Conformal, DevSymGradientVanishesAndCurvatureIsConstant) {
  const ConformalMapParams p = generic_conformal();
  const PolyVec3Field u = conformal_displacement(p);
  EXPECT_TRUE(dev_sym(grad(u)).is_zero());
  EXPECT_EQ(curvature(u), PolyMat3Field::constant(anti(axl(p.W_hat))));
}

TEST(Conformal, ResponsePerModelKind) {
  const IsotropicMaterial mat = sample_material();
  const ConformalMapParams p = generic_conformal();
  const PolyVec3Field u = conformal_displacement(p);

  // Modified-conformal: the response and its energy annihilate the map.
  EXPECT_TRUE(couple_stress(curvature(u), mat, ModelKind::ModifiedConformal).is_zero());
  EXPECT_TRUE(energies(u, mat, ModelKind::ModifiedConformal).curvature.is_zero());

  // Skew-only: a constant couple stress 2 mu L_c^2 alpha2 anti(w) survives.
  EXPECT_EQ(couple_stress(curvature(u), mat, ModelKind::SkewOnly),
            PolyMat3Field::constant((Rational(2) * mat.mu * mat.L_c * mat.L_c * mat.alpha2) *
                                    anti(axl(p.W_hat))));
}

TEST(Conformal, LinearEnergyClosedForm) {
  const IsotropicMaterial mat = sample_material();
  const ConformalMapParams p = generic_conformal();
  const PolyVec3Field u = conformal_displacement(p);
  const PolyScalarField trace = tr(grad(u));
  const Rational factor =
      (Rational(3) * mat.lambda + Rational(2) * mat.mu) / Rational(6);
  EXPECT_EQ(energies(u, mat, ModelKind::ModifiedConformal).linear, factor * (trace * trace));
}

TEST(Conformal, LinearEnergyKernel) {
  const IsotropicMaterial mat = sample_material();
  // p_hat = 1 and W_hat = 0: pure rotation plus translation, zero energy.
  ConformalMapParams rigid;
  rigid.W_hat = Mat3{};
  rigid.A_hat = anti(Vec3{Rational(2), Rational(0), Rational(-1)});
  rigid.p_hat = Rational(1);
  rigid.b_hat = Vec3{Rational(4), Rational(0), Rational(0)};
  EXPECT_TRUE(
      energies(conformal_displacement(rigid), mat, ModelKind::ModifiedConformal).linear.is_zero());

  // Either a dilation or a special conformal generator switches it back on.
  ConformalMapParams dilated = rigid;
  dilated.p_hat = Rational(2);
  EXPECT_FALSE(
      energies(conformal_displacement(dilated), mat, ModelKind::ModifiedConformal).linear.is_zero());
  ConformalMapParams bent = rigid;
  bent.W_hat = anti(Vec3{Rational(0), Rational(1), Rational(0)});
  EXPECT_FALSE(
      energies(conformal_displacement(bent), mat, ModelKind::ModifiedConformal).linear.is_zero());
}

}  // namespace
}  // namespace polarity
