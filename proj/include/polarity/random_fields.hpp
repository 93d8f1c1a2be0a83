#pragma once

/// @file random_fields.hpp
/// Deterministic pseudo-random generation of exact rational tensors and
/// polynomial fields. Everything here is reproducible from a single 64-bit
/// seed, and the draw order is part of the contract so that reports can be
/// regenerated bit-for-bit (including from other languages):
///
///   state update   x ^= x << 13; x ^= x >> 7; x ^= x << 17   (xorshift64)
///   seed 0         replaced by 0x9E3779B97F4A7C15
///   coefficient    two draws: numerator (next() % 7) - 3 in [-3, 3],
///                  then denominator from {1, 2, 4} by next() % 3
///   scalar field   one coefficient per exponent triple (e1, e2, e3) with
///                  e1 + e2 + e3 <= max_degree, triples in lexicographic
///                  order (e1 outermost), zero coefficients included in the
///                  draw sequence
///   tensor field   nine scalar fields in row-major entry order
///   symmetric      six scalar fields over the upper triangle in the order
///                  (1,1) (1,2) (1,3) (2,2) (2,3) (3,3), mirrored
///   rotation       four numerator draws a,b,c,d in [-3, 3] (redrawn while
///                  all four are zero), mapped through the unit-quaternion
///                  formula, so the result is an exact rational rotation
///   cube rotation  two draws: permutation index next() % 6 (lexicographic
///                  order over the images of the axes), then sign bits
///                  next() % 8 (bit k flips row k); the last sign is flipped
///                  when needed so the determinant is +1

#include <array>
#include <cstdint>

#include "polarity/field.hpp"
#include "polarity/rational.hpp"
#include "polarity/tensor.hpp"

namespace polarity {

class XorShift64 {
 public:
  explicit XorShift64(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

 private:
  std::uint64_t state_;
};

/// Small rational in [-3, 3] with denominator 1, 2 or 4.
inline Rational random_coefficient(XorShift64& rng) {
  const int num = static_cast<int>(rng.next() % 7) - 3;
  constexpr std::array<int, 3> dens = {1, 2, 4};
  const int den = dens[static_cast<std::size_t>(rng.next() % 3)];
  return Rational(num, den);
}

inline Vec3 random_vec3(XorShift64& rng) {
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = random_coefficient(rng);
  return v;
}

inline Mat3 random_mat3(XorShift64& rng) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = random_coefficient(rng);
  return m;
}

inline Mat3 random_antisymmetric(XorShift64& rng) { return anti(random_vec3(rng)); }

inline Mat3 random_symmetric_mat3(XorShift64& rng) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      m(i, j) = random_coefficient(rng);
      m(j, i) = m(i, j);
    }
  return m;
}

/// Exact rational rotation from an integer quaternion (a, b, c, d):
/// orthogonal with determinant +1 by construction.
inline Mat3 random_rotation(XorShift64& rng) {
  Rational a, b, c, d;
  do {
    a = Rational(static_cast<int>(rng.next() % 7) - 3);
    b = Rational(static_cast<int>(rng.next() % 7) - 3);
    c = Rational(static_cast<int>(rng.next() % 7) - 3);
    d = Rational(static_cast<int>(rng.next() % 7) - 3);
  } while (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero());
  const Rational s = a * a + b * b + c * c + d * d;
  Mat3 q;
  q(0, 0) = (a * a + b * b - c * c - d * d) / s;
  q(0, 1) = Rational(2) * (b * c - a * d) / s;
  q(0, 2) = Rational(2) * (b * d + a * c) / s;
  q(1, 0) = Rational(2) * (b * c + a * d) / s;
  q(1, 1) = (a * a - b * b + c * c - d * d) / s;
  q(1, 2) = Rational(2) * (c * d - a * b) / s;
  q(2, 0) = Rational(2) * (b * d - a * c) / s;
  q(2, 1) = Rational(2) * (c * d + a * b) / s;
  q(2, 2) = (a * a - b * b - c * c + d * d) / s;
  return q;
}

/// One of the 24 proper symmetry rotations of an axis-aligned cube: a signed
/// permutation matrix with determinant +1. Each rotation is drawn with equal
/// probability. These are the rotations that map the coordinate frame onto
/// itself, i.e. the largest group under which constructions tied to the cube's
/// face normals (such as the column-paired curvature correction chi) transform
/// tensorially.
inline Mat3 random_cube_rotation(XorShift64& rng) {
  constexpr std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  constexpr std::array<int, 6> parity = {1, -1, -1, 1, 1, -1};
  const std::size_t p = static_cast<std::size_t>(rng.next() % 6);
  const std::uint64_t bits = rng.next() % 8;
  std::array<int, 3> sign;
  for (int k = 0; k < 3; ++k) sign[static_cast<std::size_t>(k)] = (bits >> k) & 1 ? -1 : 1;
  if (parity[p] * sign[0] * sign[1] * sign[2] < 0) sign[2] = -sign[2];
  Mat3 q;
  for (int k = 0; k < 3; ++k)
    q(k, perms[p][static_cast<std::size_t>(k)]) = Rational(sign[static_cast<std::size_t>(k)]);
  return q;
}

inline PolyScalarField random_scalar_field(XorShift64& rng, int max_degree) {
  PolyScalarField f;
  for (int e0 = 0; e0 <= max_degree; ++e0)
    for (int e1 = 0; e1 + e0 <= max_degree; ++e1)
      for (int e2 = 0; e2 + e1 + e0 <= max_degree; ++e2) {
        const Rational c = random_coefficient(rng);
        if (!c.is_zero()) f = f + PolyScalarField::monomial(c, {e0, e1, e2});
      }
  return f;
}

inline PolyVec3Field random_vector_field(XorShift64& rng, int max_degree) {
  PolyVec3Field v;
  for (int i = 0; i < 3; ++i) v[i] = random_scalar_field(rng, max_degree);
  return v;
}

inline PolyMat3Field random_tensor_field(XorShift64& rng, int max_degree) {
  PolyMat3Field t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = random_scalar_field(rng, max_degree);
  return t;
}

inline PolyMat3Field random_symmetric_tensor_field(XorShift64& rng, int max_degree) {
  PolyMat3Field t;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      t(i, j) = random_scalar_field(rng, max_degree);
      if (i != j) t(j, i) = t(i, j);
    }
  return t;
}

}  // namespace polarity
