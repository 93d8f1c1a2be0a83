#pragma once

/// @file cube.hpp
/// Exact integration of polynomial fields over an axis-aligned cube and its
/// six faces, and the moment/divergence identities built on those integrals.
///
/// Faces are indexed 0..5 with outward normals
///   n_0 = +e1, n_1 = +e2, n_2 = +e3, n_3 = -e1, n_4 = -e2, n_5 = -e3.
/// Moment integrands come in two flavours: about the face center (the lever
/// arm is tangential to the face) and about the cube center x0. Everything
/// reduces to monomial antidifferentiation, so all results are exact
/// rationals and all identities are checked with equality, never tolerances.

#include <array>
#include <stdexcept>

#include "polarity/field.hpp"
#include "polarity/rational.hpp"
#include "polarity/tensor.hpp"

namespace polarity {

struct Cube {
  Vec3 center;    ///< x0
  Rational edge;  ///< L_c > 0

  Cube(Vec3 x0, Rational l_c) : center(std::move(x0)), edge(std::move(l_c)) {
    if (!(edge > Rational(0))) throw std::invalid_argument("Cube: edge length must be positive");
  }

  Rational volume() const { return edge.pow(3); }
  Rational half_edge() const { return edge / Rational(2); }
};

constexpr int kFaceCount = 6;

/// Coordinate axis pierced by face f (0..5).
inline int face_axis(int f) { return f % 3; }

/// +1 for the three faces on the positive side, -1 otherwise.
inline int face_orientation(int f) { return f < 3 ? 1 : -1; }

inline Vec3 face_normal(int f) {
  Vec3 n;
  n[face_axis(f)] = Rational(face_orientation(f));
  return n;
}

inline Vec3 face_center(const Cube& cube, int f) {
  Vec3 c = cube.center;
  c[face_axis(f)] += Rational(face_orientation(f)) * cube.half_edge();
  return c;
}

namespace detail {

/// Exact integral of x^e over [a, b]: (b^{e+1} - a^{e+1}) / (e+1).
inline Rational monomial_integral(int e, const Rational& a, const Rational& b) {
  const auto p = static_cast<unsigned>(e + 1);
  return (b.pow(p) - a.pow(p)) / Rational(e + 1);
}

}  // namespace detail

/// Exact triple integral of a scalar field over the cube.
inline Rational integrate_volume(const PolyScalarField& f, const Cube& cube) {
  Rational acc;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (int k = 0; k < 3; ++k) {
      const Rational a = cube.center[k] - cube.half_edge();
      const Rational b = cube.center[k] + cube.half_edge();
      term *= detail::monomial_integral(e[static_cast<std::size_t>(k)], a, b);
    }
    acc += term;
  }
  return acc;
}

/// Exact surface integral of a scalar field over face f.
inline Rational integrate_face(const PolyScalarField& f, const Cube& cube, int face) {
  const int axis = face_axis(face);
  const Rational coord = cube.center[axis] + Rational(face_orientation(face)) * cube.half_edge();
  const PolyScalarField on_face = f.substitute_coordinate(axis, coord);
  Rational acc;
  for (const auto& [e, c] : on_face.terms()) {
    Rational term = c;
    for (int k = 0; k < 3; ++k) {
      if (k == axis) continue;
      const Rational a = cube.center[k] - cube.half_edge();
      const Rational b = cube.center[k] + cube.half_edge();
      term *= detail::monomial_integral(e[static_cast<std::size_t>(k)], a, b);
    }
    acc += term;
  }
  return acc;
}

inline Vec3 integrate_volume(const PolyVec3Field& f, const Cube& cube) {
  return {integrate_volume(f[0], cube), integrate_volume(f[1], cube), integrate_volume(f[2], cube)};
}

inline Vec3 integrate_face(const PolyVec3Field& f, const Cube& cube, int face) {
  return {integrate_face(f[0], cube, face), integrate_face(f[1], cube, face),
          integrate_face(f[2], cube, face)};
}

/// Traction field sigma . n_f on face f (not yet restricted to the face).
inline PolyVec3Field traction_field(const PolyMat3Field& sigma, int face) {
  const int axis = face_axis(face);
  const Rational s(face_orientation(face));
  return {s * sigma(0, axis), s * sigma(1, axis), s * sigma(2, axis)};
}

/// Net traction over the whole boundary: sum_f int_{face f} sigma . n_f dA.
/// By the divergence theorem this equals int Div sigma dV for any polynomial
/// sigma; for degree <= 2 it collapses to V_c . Div sigma(x0).
inline Vec3 face_traction_sum(const PolyMat3Field& sigma, const Cube& cube) {
  Vec3 total;
  for (int f = 0; f < kFaceCount; ++f) total = total + integrate_face(traction_field(sigma, f), cube, f);
  return total;
}

/// Couple of the face-f tractions about the face center:
/// int (x - c_f) x (sigma . n_f) dA. The lever arm is tangential, so this is
/// the couple the face transmits irrespective of where the cube sits.
inline Vec3 face_couple_about_face_center(const PolyMat3Field& sigma, const Cube& cube, int face) {
  const PolyVec3Field arm = PolyVec3Field::position() - PolyVec3Field::constant(face_center(cube, face));
  return integrate_face(cross(arm, traction_field(sigma, face)), cube, face);
}

/// Total moment of all boundary tractions about the cube center:
/// sum_f int (x - x0) x (sigma . n_f) dA.
inline Vec3 face_couple_about_cube_center(const PolyMat3Field& sigma, const Cube& cube) {
  const PolyVec3Field arm = PolyVec3Field::position() - PolyVec3Field::constant(cube.center);
  Vec3 total;
  for (int f = 0; f < kFaceCount; ++f)
    total = total + integrate_face(cross(arm, traction_field(sigma, f)), cube, f);
  return total;
}

struct DivergenceCrossCheck {
  Vec3 lhs;  ///< boundary side: sum_f int x cross (A . n_f) dA
  Vec3 rhs;  ///< volume side:   int [2 axl skew A + x cross Div A] dV
};

/// Divergence theorem with a cross product: both sides of
///   int_{boundary} x cross (A . n) dA = int [2 axl(skew A) + x cross Div A] dV,
/// computed independently (absolute position x; holds for any cube placement).
inline DivergenceCrossCheck divergence_theorem_cross_check(const PolyMat3Field& a, const Cube& cube) {
  const PolyVec3Field x = PolyVec3Field::position();
  Vec3 lhs;
  for (int f = 0; f < kFaceCount; ++f)
    lhs = lhs + integrate_face(cross(x, traction_field(a, f)), cube, f);
  const PolyVec3Field volume_integrand = Rational(2) * axl_skew(a) + cross(x, div(a));
  return {lhs, integrate_volume(volume_integrand, cube)};
}

}  // namespace polarity
