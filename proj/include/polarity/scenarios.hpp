#pragma once

/// @file scenarios.hpp
/// Closed-form scenarios exercised by the CLI and the test suite: a
/// three-parameter family of linear self-equilibrated stress fields whose
/// couple stress is diagonal, the classical torsion chain, and the
/// couple-balance facts (position-weighted couple sums, the boundary
/// moment identity, translation invariance of a force couple, and the
/// non-associativity of repeated cross products).

#include <stdexcept>
#include <vector>

#include "polarity/cube.hpp"
#include "polarity/elasticity.hpp"
#include "polarity/field.hpp"
#include "polarity/rational.hpp"
#include "polarity/taylor.hpp"
#include "polarity/tensor.hpp"

namespace polarity {

// ---------------------------------------------------------------------------
// Trace-free family
// ---------------------------------------------------------------------------

/// sigma = a B_a + b B_b + c B_c over a cube of edge L centered at the
/// origin, where the three generators are the symmetric, trace-free,
/// divergence-free linear fields
///   B_a = [[0,-z, y],[-z,0,0],[ y,0,0]],
///   B_b = [[0, z, 0],[ z,0,-x],[0,-x,0]],
///   B_c = [[0, 0,-y],[0,0, x],[-y, x,0]].
struct TraceFreeFamilyParams {
  Rational a;
  Rational b;
  Rational c;
  Rational L;  ///< cube edge, > 0
};

struct TraceFreeFamilyResult {
  PolyMat3Field sigma;
  Mat3 m_integral;  ///< column i = (face-i couple about its center) / L^2
  Mat3 m_closed;    ///< (L^2/12) diag(2a-b-c, 2b-a-c, 2c-a-b)
};

inline PolyMat3Field trace_free_generator_a() {
  PolyMat3Field f;
  const PolyScalarField y = PolyScalarField::variable(1);
  const PolyScalarField z = PolyScalarField::variable(2);
  f(0, 1) = Rational(-1) * z;
  f(0, 2) = y;
  f(1, 0) = Rational(-1) * z;
  f(2, 0) = y;
  return f;
}

inline PolyMat3Field trace_free_generator_b() {
  PolyMat3Field f;
  const PolyScalarField x = PolyScalarField::variable(0);
  const PolyScalarField z = PolyScalarField::variable(2);
  f(0, 1) = z;
  f(1, 0) = z;
  f(1, 2) = Rational(-1) * x;
  f(2, 1) = Rational(-1) * x;
  return f;
}

inline PolyMat3Field trace_free_generator_c() {
  PolyMat3Field f;
  const PolyScalarField x = PolyScalarField::variable(0);
  const PolyScalarField y = PolyScalarField::variable(1);
  f(0, 2) = Rational(-1) * y;
  f(1, 2) = x;
  f(2, 0) = Rational(-1) * y;
  f(2, 1) = x;
  return f;
}

inline TraceFreeFamilyResult trace_free_family(const TraceFreeFamilyParams& p) {
  if (!(p.L > Rational(0))) throw std::invalid_argument("trace_free_family: L must be positive");
  TraceFreeFamilyResult r;
  r.sigma = p.a * trace_free_generator_a() + p.b * trace_free_generator_b() +
            p.c * trace_free_generator_c();
  const Cube cube{Vec3{}, p.L};
  const Rational area = p.L * p.L;
  for (int f = 0; f < 3; ++f) {
    const Vec3 couple = face_couple_about_face_center(r.sigma, cube, f);
    for (int i = 0; i < 3; ++i) r.m_integral(i, f) = couple[i] / area;
  }
  const Rational s = p.L * p.L / Rational(12);
  r.m_closed = Mat3::diagonal(s * (Rational(2) * p.a - p.b - p.c),
                              s * (Rational(2) * p.b - p.a - p.c),
                              s * (Rational(2) * p.c - p.a - p.b));
  return r;
}

// ---------------------------------------------------------------------------
// Torsion of a shaft with square cross-section cells
// ---------------------------------------------------------------------------

/// Twist rate alpha_bar about e_3 with classical displacement
/// u = (-alpha_bar y z, alpha_bar x z, 0); the cube edge dx sets the cell
/// over which face couples are integrated.
struct TorsionParams {
  Rational alpha_bar;
  IsotropicMaterial material;
  Rational dx;  ///< cell edge, > 0
};

struct TorsionScenario {
  PolyVec3Field displacement;
  PolyMat3Field strain_field;
  PolyMat3Field stress;          ///< trace-free, so lambda never enters
  Mat3 curvature_at_origin;      ///< alpha_bar diag(-1/2, -1/2, 1)
  Mat3 couple_stress_material;   ///< alpha_bar mu L_c^2 alpha1 diag(-1,-1,2)
  std::array<Vec3, kFaceCount> face_couples;  ///< of the stress over the cell
  Mat3 couple_stress_from_faces;  ///< column i = face-i couple / dx^2
  bool couples_match;             ///< material law == face integrals
  bool match_condition;           ///< L_c^2 alpha1 == dx^2 / 12
  Rational family_coefficient;    ///< c = 12 alpha_bar mu alpha1
  Mat3 family_couple_stress;      ///< m_closed of (0,0,c) at L = L_c
  bool family_couple_match;       ///< family m reproduces the material m
  bool family_stress_match;       ///< family sigma == torsion stress (alpha1 = 1/12)
};

inline TorsionScenario torsion_scenario(const TorsionParams& p) {
  if (!(p.dx > Rational(0))) throw std::invalid_argument("torsion_scenario: dx must be positive");
  TorsionScenario s;
  const PolyScalarField x = PolyScalarField::variable(0);
  const PolyScalarField y = PolyScalarField::variable(1);
  const PolyScalarField z = PolyScalarField::variable(2);
  s.displacement = PolyVec3Field{Rational(-1) * p.alpha_bar * (y * z), p.alpha_bar * (x * z),
                                 PolyScalarField{}};
  s.strain_field = strain(s.displacement);
  s.stress = local_stress(s.strain_field, p.material);
  const PolyMat3Field k = curvature(s.displacement);
  s.curvature_at_origin = k.evaluate(Vec3{});
  const PolyMat3Field m =
      couple_stress(k, p.material, ModelKind::Indeterminate);
  s.couple_stress_material = m.evaluate(Vec3{});

  const Cube cell{Vec3{}, p.dx};
  const Rational area = p.dx * p.dx;
  for (int f = 0; f < kFaceCount; ++f)
    s.face_couples[static_cast<std::size_t>(f)] = face_couple_about_face_center(s.stress, cell, f);
  for (int f = 0; f < 3; ++f)
    for (int i = 0; i < 3; ++i)
      s.couple_stress_from_faces(i, f) = s.face_couples[static_cast<std::size_t>(f)][i] / area;
  s.couples_match = s.couple_stress_material == s.couple_stress_from_faces;
  s.match_condition =
      p.material.L_c * p.material.L_c * p.material.alpha1 == p.dx * p.dx / Rational(12);

  s.family_coefficient = Rational(12) * p.alpha_bar * p.material.mu * p.material.alpha1;
  const TraceFreeFamilyResult fam = trace_free_family(
      TraceFreeFamilyParams{Rational(0), Rational(0), s.family_coefficient, p.material.L_c});
  s.family_couple_stress = fam.m_closed;
  s.family_couple_match = fam.m_closed == s.couple_stress_material;
  s.family_stress_match = fam.sigma == s.stress;
  return s;
}

// ---------------------------------------------------------------------------
// Couple-balance facts
// ---------------------------------------------------------------------------

struct AppliedCouple {
  Vec3 position;
  Vec3 couple;
};

/// sum_i x_i cross L_i over a set of applied couples. A couple anchored at
/// the origin contributes nothing, and the sum shifts by d cross (sum L_i)
/// when all anchor points move by d; a statics cantilever with equilibrated
/// end couples therefore yields a nonzero, origin-independent value.
inline Vec3 yang_third_balance(const std::vector<AppliedCouple>& couples) {
  Vec3 s;
  for (const AppliedCouple& c : couples) s = s + cross(c.position, c.couple);
  return s;
}

struct SurfaceMomentIdentity {
  Vec3 surface;    ///< sum_f int x cross (m n_f) dA, absolute position x
  Vec3 volume;     ///< int (2 axl skew m + x cross Div m) dV
  Vec3 skew_only;  ///< int 2 axl skew m dV
};

/// The boundary moment of couple tractions equals a volume integral whose
/// non-divergence part sees only the skew part of m; for divergence-free m
/// the surface moment reduces to skew_only, so a symmetric couple-stress
/// field transmits no net boundary moment.
inline SurfaceMomentIdentity yang_surface_identity(const PolyMat3Field& m, const Cube& cube) {
  SurfaceMomentIdentity r;
  const DivergenceCrossCheck check = divergence_theorem_cross_check(m, cube);
  r.surface = check.lhs;
  r.volume = check.rhs;
  const PolyVec3Field skew_term = Rational(2) * axl_skew(m);
  r.skew_only = integrate_volume(skew_term, cube);
  return r;
}

struct CoupleTranslation {
  Vec3 couple;          ///< (x1 - x2) cross F2
  Vec3 couple_shifted;  ///< same pair of forces with both anchors moved
  bool invariant;       ///< always true: the couple ignores the anchor
};

/// The moment of the force pair {+F2 at x1, -F2 at x2} about the origin,
/// before and after translating both anchor points by shift. Degenerate
/// pairs (x1 == x2) carry no couple and are rejected.
inline CoupleTranslation couple_translation_invariance(const Vec3& F2, const Vec3& x1,
                                                       const Vec3& x2, const Vec3& shift) {
  if ((x1 - x2).is_zero())
    throw std::invalid_argument("couple_translation_invariance: anchor points must differ");
  CoupleTranslation r;
  r.couple = cross(x1, F2) + cross(x2, Rational(-1) * F2);
  r.couple_shifted = cross(x1 + shift, F2) + cross(x2 + shift, Rational(-1) * F2);
  r.invariant = r.couple == r.couple_shifted;
  return r;
}

struct NonassociativityWitness {
  Vec3 left;   ///< dx cross (dx cross F2)
  Vec3 right;  ///< (dx cross dx) cross F2 = 0
};

/// Shows that transporting a couple is not the same as double-crossing the
/// lever arm: requires dx cross F2 != 0 so the witness is non-trivial.
inline NonassociativityWitness nonassociativity_witness(const Vec3& dx, const Vec3& F2) {
  if (cross(dx, F2).is_zero())
    throw std::invalid_argument("nonassociativity_witness: dx and F2 must not be parallel");
  NonassociativityWitness w;
  w.left = cross(dx, cross(dx, F2));
  w.right = cross(cross(dx, dx), F2);
  return w;
}

}  // namespace polarity
