#pragma once

/// @file tensor.hpp
/// Exact 3-vector / 3x3-tensor algebra: products, norms, the orthogonal
/// decomposition into deviatoric-symmetric + skew + spherical parts, the
/// Levi-Civita tensor, the axial-vector maps axl/anti, and exact rotation
/// helpers.
///
/// Index conventions (fixed throughout the library):
///   * second-order tensors are row-major, X(i,j) = X_ij; the first index is
///     the component direction of a traction, the second the plane normal,
///     so the Cauchy traction is t = X . n (column action);
///   * eps(1,2,3) = eps(2,3,1) = eps(3,1,2) = +1 (0-based in code);
///   * cross(a,b)_k = a_i b_j eps_ijk;
///   * axl(A)_k = -1/2 A_ij eps_ijk for antisymmetric A, so that
///     A . b = axl(A) x b, and anti is its inverse:
///     anti(a) = [[0,-a3,a2],[a3,0,-a1],[-a2,a1,0]].

#include <array>
#include <stdexcept>
#include <string>

#include "polarity/rational.hpp"

namespace polarity {

struct Vec3 {
  std::array<Rational, 3> c{};

  Vec3() = default;
  Vec3(Rational a, Rational b, Rational d) : c{std::move(a), std::move(b), std::move(d)} {}

  Rational& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const Rational& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
  Vec3 operator-() const { return {-c[0], -c[1], -c[2]}; }
  friend Vec3 operator*(const Rational& s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }
  friend bool operator==(const Vec3& a, const Vec3& b) { return a.c == b.c; }
  friend bool operator!=(const Vec3& a, const Vec3& b) { return !(a == b); }
};

struct Mat3 {
  std::array<std::array<Rational, 3>, 3> m{};

  Mat3() = default;

  static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
    Mat3 x;
    for (int j = 0; j < 3; ++j) {
      x(0, j) = r0[j];
      x(1, j) = r1[j];
      x(2, j) = r2[j];
    }
    return x;
  }

  static Mat3 identity() {
    Mat3 x;
    x(0, 0) = x(1, 1) = x(2, 2) = Rational(1);
    return x;
  }

  static Mat3 diagonal(const Rational& a, const Rational& b, const Rational& c) {
    Mat3 x;
    x(0, 0) = a;
    x(1, 1) = b;
    x(2, 2) = c;
    return x;
  }

  Rational& operator()(int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const Rational& operator()(int i, int j) const {
    return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  bool is_zero() const {
    for (const auto& row : m)
      for (const auto& v : row)
        if (!v.is_zero()) return false;
    return true;
  }

  Vec3 row(int i) const { return {(*this)(i, 0), (*this)(i, 1), (*this)(i, 2)}; }
  Vec3 col(int j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }

  friend Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 x;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) x(i, j) = a(i, j) + b(i, j);
    return x;
  }
  friend Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 x;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) x(i, j) = a(i, j) - b(i, j);
    return x;
  }
  Mat3 operator-() const {
    Mat3 x;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) x(i, j) = -(*this)(i, j);
    return x;
  }
  friend Mat3 operator*(const Rational& s, const Mat3& a) {
    Mat3 x;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) x(i, j) = s * a(i, j);
    return x;
  }
  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 x;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Rational acc;
        for (int k = 0; k < 3; ++k) acc += a(i, k) * b(k, j);
        x(i, j) = acc;
      }
    return x;
  }
  friend Vec3 operator*(const Mat3& a, const Vec3& v) {
    Vec3 x;
    for (int i = 0; i < 3; ++i) {
      Rational acc;
      for (int j = 0; j < 3; ++j) acc += a(i, j) * v[j];
      x[i] = acc;
    }
    return x;
  }
  friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }
  friend bool operator!=(const Mat3& a, const Mat3& b) { return !(a == b); }
};

/// eps_ijk with 0-based indices; +1 for (0,1,2),(1,2,0),(2,0,1).
inline int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  if ((i == 0 && j == 1 && k == 2) || (i == 1 && j == 2 && k == 0) || (i == 2 && j == 0 && k == 1)) return 1;
  return -1;
}

inline Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

/// cross(a,b)_k = a_i b_j eps_ijk (right-handed).
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Rational norm_sq(const Vec3& a) { return dot(a, a); }

inline Mat3 transpose(const Mat3& x) {
  Mat3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = x(j, i);
  return t;
}

inline Rational tr(const Mat3& x) { return x(0, 0) + x(1, 1) + x(2, 2); }

inline Mat3 sym(const Mat3& x) { return Rational(1, 2) * (x + transpose(x)); }
inline Mat3 skew(const Mat3& x) { return Rational(1, 2) * (x - transpose(x)); }

/// Trace-free part: X - (1/3) tr(X) 1.
inline Mat3 dev(const Mat3& x) { return x - (tr(x) / Rational(3)) * Mat3::identity(); }

inline Mat3 dev_sym(const Mat3& x) { return dev(sym(x)); }

/// Diagonal part as a tensor, diag(X_11, X_22, X_33).
inline Mat3 diag_part(const Mat3& x) { return Mat3::diagonal(x(0, 0), x(1, 1), x(2, 2)); }

/// Frobenius inner product <A,B> = A_ij B_ij.
inline Rational inner(const Mat3& a, const Mat3& b) {
  Rational acc;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += a(i, j) * b(i, j);
  return acc;
}

inline Rational norm_sq(const Mat3& a) { return inner(a, a); }

inline bool is_symmetric(const Mat3& x) { return x == transpose(x); }
inline bool is_antisymmetric(const Mat3& x) { return transpose(x) == -x; }

struct TensorSplit {
  Mat3 dev_sym;  ///< trace-free symmetric part
  Mat3 skew;     ///< antisymmetric part
  Mat3 sph;      ///< spherical part (1/3) tr(X) 1
};

/// Orthogonal decomposition X = dev sym X + skew X + (1/3) tr(X) 1.
inline TensorSplit decompose(const Mat3& x) {
  return {dev_sym(x), skew(x), (tr(x) / Rational(3)) * Mat3::identity()};
}

/// Axial vector of an antisymmetric tensor, axl(A)_k = -1/2 A_ij eps_ijk.
/// Rejects non-antisymmetric input; use axl_skew for arbitrary tensors.
inline Vec3 axl(const Mat3& a) {
  if (!is_antisymmetric(a)) throw std::invalid_argument("axl: input is not antisymmetric");
  return {a(2, 1), a(0, 2), a(1, 0)};
}

/// axl of the skew part: well-defined for any tensor, equals axl on so(3).
inline Vec3 axl_skew(const Mat3& x) {
  return {Rational(1, 2) * (x(2, 1) - x(1, 2)), Rational(1, 2) * (x(0, 2) - x(2, 0)),
          Rational(1, 2) * (x(1, 0) - x(0, 1))};
}

/// anti(a)_ij = -eps_ijk a_k; the inverse of axl, with anti(a) . b = a x b.
inline Mat3 anti(const Vec3& a) {
  Mat3 x;
  x(0, 1) = -a[2];
  x(0, 2) = a[1];
  x(1, 0) = a[2];
  x(1, 2) = -a[0];
  x(2, 0) = -a[1];
  x(2, 1) = a[0];
  return x;
}

/// Exact proper-orthogonality test: Q^T Q = 1 and det Q = +1.
inline bool is_rotation(const Mat3& q) {
  if (transpose(q) * q != Mat3::identity()) return false;
  const Rational det = q(0, 0) * (q(1, 1) * q(2, 2) - q(1, 2) * q(2, 1)) -
                       q(0, 1) * (q(1, 0) * q(2, 2) - q(1, 2) * q(2, 0)) +
                       q(0, 2) * (q(1, 0) * q(2, 1) - q(1, 1) * q(2, 0));
  return det == Rational(1);
}

/// Similarity transform Q X Q^T for a proper rotation Q (checked exactly).
inline Mat3 rotate_tensor(const Mat3& q, const Mat3& x) {
  if (!is_rotation(q)) throw std::invalid_argument("rotate_tensor: Q is not a proper rotation");
  return q * x * transpose(q);
}

/// Rotation about coordinate axis k in {0,1,2} built from an exact rational
/// cosine/sine pair (c, s) with c^2 + s^2 = 1 (e.g. 3/5, 4/5). Keeps all
/// rotation tests exact; rejects pairs off the unit circle.
inline Mat3 axis_rotation(int axis, const Rational& c, const Rational& s) {
  if (c * c + s * s != Rational(1)) throw std::invalid_argument("axis_rotation: c^2 + s^2 must equal 1");
  const int u = (axis + 1) % 3, v = (axis + 2) % 3;
  Mat3 q;
  q(axis, axis) = Rational(1);
  q(u, u) = c;
  q(v, v) = c;
  q(u, v) = -s;
  q(v, u) = s;
  return q;
}

inline std::string to_string(const Vec3& v) {
  return "(" + v[0].to_string() + ", " + v[1].to_string() + ", " + v[2].to_string() + ")";
}

inline std::string to_string(const Mat3& x) {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += (i ? "; " : "") + x(i, 0).to_string() + ", " + x(i, 1).to_string() + ", " + x(i, 2).to_string();
  }
  return s + "]";
}

}  // namespace polarity
