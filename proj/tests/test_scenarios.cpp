// Analytic scenarios: the trace-free linear stress family and its closed-form
// couple stress, the torsion cell walkthrough, the cantilever couple balance,
// the boundary moment identity for couple tractions, and the two small
// vector-algebra facts about transporting couples.

#include "polarity/scenarios.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "polarity/cube.hpp"
#include "polarity/elasticity.hpp"
#include "polarity/field.hpp"

namespace polarity {
namespace {

TEST(TraceFreeFamily, GeneratorsAreSymmetricTracelessDivergenceFree) {
  for (const PolyMat3Field& g :
       {trace_free_generator_a(), trace_free_generator_b(), trace_free_generator_c()}) {
    EXPECT_EQ(g, transpose(g));
    EXPECT_TRUE(tr(g).is_zero());
    EXPECT_TRUE(div(g).is_zero());
  }
}

TEST(TraceFreeFamily, ClosedFormMatchesFaceIntegrals) {
  const TraceFreeFamilyResult r =
      trace_free_family(TraceFreeFamilyParams{Rational(1), Rational(2), Rational(3), Rational(1)});
  EXPECT_EQ(r.m_closed,
            Mat3::diagonal(Rational(-1, 4), Rational(0), Rational(1, 4)));
  EXPECT_EQ(r.m_integral, r.m_closed);

  // Doubling the cube edge scales the couple stress by L^2.
  const TraceFreeFamilyResult big =
      trace_free_family(TraceFreeFamilyParams{Rational(1), Rational(2), Rational(3), Rational(2)});
  EXPECT_EQ(big.m_closed, Mat3::diagonal(Rational(-1), Rational(0), Rational(1)));
  EXPECT_EQ(big.m_integral, big.m_closed);
}

TEST(TraceFreeFamily, EqualWeightsCarryNoCouple) {
  // The three generators sum to zero, so equal weights annihilate the stress
  // itself and with it the couple stress.
  EXPECT_TRUE((trace_free_generator_a() + trace_free_generator_b() + trace_free_generator_c())
                  .is_zero());
  const TraceFreeFamilyResult r =
      trace_free_family(TraceFreeFamilyParams{Rational(1), Rational(1), Rational(1), Rational(3)});
  EXPECT_EQ(r.m_closed, Mat3{});
  EXPECT_EQ(r.m_integral, Mat3{});
  EXPECT_TRUE(r.sigma.is_zero());
}

TEST(TraceFreeFamily, RejectsDegenerateCube) {
  EXPECT_THROW(
      trace_free_family(TraceFreeFamilyParams{Rational(1), Rational(0), Rational(0), Rational(0)}),
      std::invalid_argument);
}

TorsionParams matched_torsion() {
  // mu alpha_bar = 6, L_c^2 alpha1 = 1/12 = dx^2/12.
  return TorsionParams{
      Rational(2),
      IsotropicMaterial{Rational(3), Rational(5), Rational(1), Rational(1, 12), Rational(1),
                        Rational(0)},
      Rational(1)};
}

TEST(Torsion, CellWalkthroughAtTheMatchedLength) {
  const TorsionScenario s = torsion_scenario(matched_torsion());

  EXPECT_EQ(s.curvature_at_origin, Mat3::diagonal(Rational(-1), Rational(-1), Rational(2)));
  EXPECT_EQ(s.couple_stress_material,
            Mat3::diagonal(Rational(-1, 2), Rational(-1, 2), Rational(1)));

  // Lateral faces carry -mu alpha_bar dx^4/12 about their own axis; the
  // axial face couple is doubled and reversed.
  EXPECT_EQ(s.face_couples[0], (Vec3{Rational(-1, 2), Rational(0), Rational(0)}));
  EXPECT_EQ(s.face_couples[1], (Vec3{Rational(0), Rational(-1, 2), Rational(0)}));
  EXPECT_EQ(s.face_couples[2], (Vec3{Rational(0), Rational(0), Rational(1)}));
  for (int f = 0; f < 3; ++f)
    EXPECT_EQ(s.face_couples[static_cast<std::size_t>(f + 3)],
              Rational(-1) * s.face_couples[static_cast<std::size_t>(f)]);

  EXPECT_TRUE(s.match_condition);
  EXPECT_TRUE(s.couples_match);
  EXPECT_EQ(s.couple_stress_from_faces, s.couple_stress_material);

  // lambda never enters: the torsion strain is traceless.
  EXPECT_TRUE(tr(s.stress).is_zero());

  // Family inclusion: c = 12 alpha_bar mu alpha1 = 6 reproduces both the
  // couple stress and (because alpha1 = 1/12) the stress itself.
  EXPECT_EQ(s.family_coefficient, Rational(6));
  EXPECT_TRUE(s.family_couple_match);
  EXPECT_TRUE(s.family_stress_match);
}

TEST(Torsion, MismatchedCellBreaksTheFaceCoupleAgreement) {
  TorsionParams p = matched_torsion();
  p.dx = Rational(2);
  const TorsionScenario s = torsion_scenario(p);
  EXPECT_FALSE(s.match_condition);
  EXPECT_FALSE(s.couples_match);
  // The face integrals scale with dx^2 while the material law stays put.
  EXPECT_EQ(s.couple_stress_from_faces,
            Mat3::diagonal(Rational(-2), Rational(-2), Rational(4)));
}

TEST(Torsion, FamilyReproducesCoupleStressButNotStressForOtherAlpha1) {
  TorsionParams p = matched_torsion();
  p.material.alpha1 = Rational(1, 6);
  const TorsionScenario s = torsion_scenario(p);
  EXPECT_TRUE(s.family_couple_match);
  EXPECT_FALSE(s.family_stress_match);
}

TEST(Torsion, RejectsDegenerateCell) {
  TorsionParams p = matched_torsion();
  p.dx = Rational(0);
  EXPECT_THROW(torsion_scenario(p), std::invalid_argument);
}

TEST(Cantilever, PositionWeightedCoupleSum) {
  const Rational ell(3);
  const Rational L(5);
  const std::vector<AppliedCouple> couples = {
      {Vec3{ell, Rational(0), Rational(0)}, Vec3{Rational(0), L, Rational(0)}},
      {Vec3{}, Vec3{Rational(0), Rational(-1) * L, Rational(0)}}};
  EXPECT_EQ(yang_third_balance(couples), (Vec3{Rational(0), Rational(0), Rational(15)}));

  // The couples are equilibrated, so the sum ignores a common shift of all
  // anchor points.
  std::vector<AppliedCouple> shifted = couples;
  const Vec3 d{Rational(1), Rational(2), Rational(3)};
  for (AppliedCouple& c : shifted) c.position = c.position + d;
  EXPECT_EQ(yang_third_balance(shifted), yang_third_balance(couples));
}

TEST(SurfaceMoment, ConstantCoupleStress) {
  const Cube cube{Vec3{Rational(1), Rational(0), Rational(-2)}, Rational(2)};

  // Constant symmetric m: no boundary moment at all.
  PolyMat3Field sym_m;
  sym_m(0, 1) = PolyScalarField::constant(Rational(3));
  sym_m(1, 0) = PolyScalarField::constant(Rational(3));
  const SurfaceMomentIdentity sym_r = yang_surface_identity(sym_m, cube);
  EXPECT_TRUE(sym_r.surface.is_zero());
  EXPECT_EQ(sym_r.surface, sym_r.volume);

  // Constant skew m = anti(a): the boundary moment is 2 a V.
  const Vec3 a{Rational(1), Rational(-1), Rational(2)};
  const PolyMat3Field skew_m = PolyMat3Field::constant(anti(a));
  const SurfaceMomentIdentity skew_r = yang_surface_identity(skew_m, cube);
  EXPECT_EQ(skew_r.surface, (Rational(2) * cube.volume()) * a);
  EXPECT_EQ(skew_r.surface, skew_r.volume);
  EXPECT_EQ(skew_r.surface, skew_r.skew_only);
}

TEST(SurfaceMoment, ResidualIsTheDivergenceMoment) {
  // A couple-stress field with nonzero divergence on an off-center cube.
  PolyMat3Field m;
  m(0, 0) = PolyScalarField::variable(0) * PolyScalarField::variable(1);
  m(1, 2) = PolyScalarField::variable(2) * PolyScalarField::variable(2);
  m(2, 1) = PolyScalarField::variable(0);
  const Cube cube{Vec3{Rational(1, 2), Rational(-1), Rational(0)}, Rational(3, 2)};
  const SurfaceMomentIdentity r = yang_surface_identity(m, cube);
  EXPECT_EQ(r.surface, r.volume);
  const Vec3 divergence_moment =
      integrate_volume(cross(PolyVec3Field::position(), div(m)), cube);
  EXPECT_EQ(r.surface - r.skew_only, divergence_moment);
  EXPECT_FALSE(divergence_moment.is_zero());
}

TEST(CoupleTransport, TranslationInvariance) {
  const Vec3 F2{Rational(1), Rational(0), Rational(0)};
  const Vec3 p1{Rational(0), Rational(1), Rational(0)};
  const Vec3 p2{};
  const Vec3 shift{Rational(5), Rational(7), Rational(-2)};
  const CoupleTranslation r = couple_translation_invariance(F2, p1, p2, shift);
  EXPECT_EQ(r.couple, (Vec3{Rational(0), Rational(0), Rational(-1)}));
  EXPECT_EQ(r.couple_shifted, r.couple);
  EXPECT_TRUE(r.invariant);
  EXPECT_THROW(couple_translation_invariance(F2, p1, p1, shift), std::invalid_argument);
}

TEST(CoupleTransport, DoubleCrossIsNotTransport) {
  const Vec3 dx{Rational(1), Rational(0), Rational(0)};
  const Vec3 F2{Rational(0), Rational(1), Rational(0)};
  const NonassociativityWitness w = nonassociativity_witness(dx, F2);
  EXPECT_EQ(w.left, (Vec3{Rational(0), Rational(-1), Rational(0)}));
  EXPECT_TRUE(w.right.is_zero());
  EXPECT_NE(w.left, w.right);
  EXPECT_THROW(nonassociativity_witness(dx, Rational(2) * dx), std::invalid_argument);
}

}  // namespace
}  // namespace polarity
