#pragma once

/// @file field.hpp
/// Multivariate polynomial fields over (x1, x2, x3) with exact rational
/// coefficients, in scalar / 3-vector / 3x3-tensor / 3x3x3-tensor flavours,
/// plus the differential operators used throughout:
///
///   grad phi = phi,i e_i                 div b  = b_i,i
///   Grad b   = b_i,j e_i (x) e_j         Div X  = X_ij,j e_i
///   GRAD X   = X_ij,k                    DIV M  = M_ijk,k e_i (x) e_j
///   curl v   = -v_a,b eps_abi e_i        Curl X = row-wise curl
///
/// The curl sign convention equals the standard right-handed curl and is
/// locked by the identity curl v = 2 axl(skew Grad v), which the test suite
/// pins together with (curl v)_3 = v_2,1 - v_1,2.
///
/// Fields are immutable value types in canonical form: a sorted sparse map
/// from exponent triples to non-zero coefficients. All operations are exact.

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polarity/rational.hpp"
#include "polarity/tensor.hpp"

namespace polarity {

/// Monomial exponents (i, j, k) for x1^i x2^j x3^k. Always non-negative.
using Exponents = std::array<int, 3>;

class PolyScalarField {
 public:
  PolyScalarField() = default;

  /// 0-degree field with the given value.
  static PolyScalarField constant(const Rational& c) {
    PolyScalarField f;
    f.add_term(c, {0, 0, 0});
    return f;
  }

  /// c * x1^e0 x2^e1 x3^e2. Rejects negative exponents.
  static PolyScalarField monomial(const Rational& c, const Exponents& e) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0)
      throw std::invalid_argument("PolyScalarField: negative exponent");
    PolyScalarField f;
    f.add_term(c, e);
    return f;
  }

  /// The coordinate field x_k, k in {0,1,2}.
  static PolyScalarField variable(int k) {
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(k)] = 1;
    return monomial(Rational(1), e);
  }

  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero field.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
  }

  /// Largest |coefficient|; 0 for the zero field. Used for truncation reports.
  Rational max_abs_coeff() const {
    Rational m;
    for (const auto& [e, c] : terms_) m = max(m, c.abs());
    return m;
  }

  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
  }

  Rational evaluate(const Vec3& x) const {
    Rational acc;
    for (const auto& [e, c] : terms_) {
      acc += c * x[0].pow(static_cast<unsigned>(e[0])) * x[1].pow(static_cast<unsigned>(e[1])) *
             x[2].pow(static_cast<unsigned>(e[2]));
    }
    return acc;
  }

  /// Exact partial derivative with respect to x_k.
  PolyScalarField derivative(int k) const {
    PolyScalarField d;
    const auto ki = static_cast<std::size_t>(k);
    for (const auto& [e, c] : terms_) {
      if (e[ki] == 0) continue;
      Exponents de = e;
      de[ki] -= 1;
      d.add_term(Rational(e[ki]) * c, de);
    }
    return d;
  }

  /// Substitutes x_k -> sum_l M(k,l) x_l + t_k and expands. Exact polynomial
  /// composition with an affine map; used for rotation pushforwards and for
  /// recentering a field at a cube center.
  PolyScalarField substitute_affine(const Mat3& m, const Vec3& t) const {
    std::array<PolyScalarField, 3> image;
    for (int k = 0; k < 3; ++k) {
      PolyScalarField lin = constant(t[k]);
      for (int l = 0; l < 3; ++l) {
        if (!m(k, l).is_zero()) lin = lin + monomial(m(k, l), unit_exp(l));
      }
      image[static_cast<std::size_t>(k)] = lin;
    }
    // Cache powers of each substituted coordinate up to the needed degree.
    std::array<std::vector<PolyScalarField>, 3> powers;
    for (int k = 0; k < 3; ++k) powers[static_cast<std::size_t>(k)].push_back(constant(Rational(1)));
    PolyScalarField out;
    for (const auto& [e, c] : terms_) {
      PolyScalarField term = constant(c);
      for (int k = 0; k < 3; ++k) {
        auto& pk = powers[static_cast<std::size_t>(k)];
        while (static_cast<int>(pk.size()) <= e[static_cast<std::size_t>(k)])
          pk.push_back(pk.back() * image[static_cast<std::size_t>(k)]);
        term = term * pk[static_cast<std::size_t>(e[static_cast<std::size_t>(k)])];
      }
      out = out + term;
    }
    return out;
  }

  /// Substitutes the single coordinate x_k := v, collapsing onto the other two.
  PolyScalarField substitute_coordinate(int k, const Rational& v) const {
    PolyScalarField out;
    const auto ki = static_cast<std::size_t>(k);
    for (const auto& [e, c] : terms_) {
      Exponents re = e;
      re[ki] = 0;
      out.add_term(c * v.pow(static_cast<unsigned>(e[ki])), re);
    }
    return out;
  }

  /// Keeps only monomials of total degree <= d.
  PolyScalarField truncate_degree(int d) const {
    PolyScalarField out;
    for (const auto& [e, c] : terms_)
      if (e[0] + e[1] + e[2] <= d) out.add_term(c, e);
    return out;
  }

  friend PolyScalarField operator+(const PolyScalarField& a, const PolyScalarField& b) {
    PolyScalarField s = a;
    for (const auto& [e, c] : b.terms_) s.add_term(c, e);
    return s;
  }
  friend PolyScalarField operator-(const PolyScalarField& a, const PolyScalarField& b) {
    PolyScalarField s = a;
    for (const auto& [e, c] : b.terms_) s.add_term(-c, e);
    return s;
  }
  PolyScalarField operator-() const {
    PolyScalarField s;
    for (const auto& [e, c] : terms_) s.add_term(-c, e);
    return s;
  }
  friend PolyScalarField operator*(const PolyScalarField& a, const PolyScalarField& b) {
    PolyScalarField p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        p.add_term(ca * cb, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]});
    return p;
  }
  friend PolyScalarField operator*(const Rational& s, const PolyScalarField& f) {
    PolyScalarField p;
    if (s.is_zero()) return p;
    for (const auto& [e, c] : f.terms_) p.add_term(s * c, e);
    return p;
  }
  friend bool operator==(const PolyScalarField& a, const PolyScalarField& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PolyScalarField& a, const PolyScalarField& b) { return !(a == b); }

 private:
  static Exponents unit_exp(int k) {
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(k)] = 1;
    return e;
  }

  void add_term(const Rational& c, const Exponents& e) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Exponents, Rational> terms_;
};

struct PolyVec3Field {
  std::array<PolyScalarField, 3> c{};

  PolyVec3Field() = default;
  PolyVec3Field(PolyScalarField a, PolyScalarField b, PolyScalarField d)
      : c{std::move(a), std::move(b), std::move(d)} {}

  static PolyVec3Field constant(const Vec3& v) {
    return {PolyScalarField::constant(v[0]), PolyScalarField::constant(v[1]),
            PolyScalarField::constant(v[2])};
  }

  /// The identity position field x.
  static PolyVec3Field position() {
    return {PolyScalarField::variable(0), PolyScalarField::variable(1), PolyScalarField::variable(2)};
  }

  PolyScalarField& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const PolyScalarField& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
  int degree() const { return std::max({c[0].degree(), c[1].degree(), c[2].degree()}); }

  Vec3 evaluate(const Vec3& x) const { return {c[0].evaluate(x), c[1].evaluate(x), c[2].evaluate(x)}; }

  friend PolyVec3Field operator+(const PolyVec3Field& a, const PolyVec3Field& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  }
  friend PolyVec3Field operator-(const PolyVec3Field& a, const PolyVec3Field& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  }
  PolyVec3Field operator-() const { return {-c[0], -c[1], -c[2]}; }
  friend PolyVec3Field operator*(const Rational& s, const PolyVec3Field& v) {
    return {s * v[0], s * v[1], s * v[2]};
  }
  friend PolyVec3Field operator*(const PolyScalarField& s, const PolyVec3Field& v) {
    return {s * v[0], s * v[1], s * v[2]};
  }
  friend bool operator==(const PolyVec3Field& a, const PolyVec3Field& b) { return a.c == b.c; }
  friend bool operator!=(const PolyVec3Field& a, const PolyVec3Field& b) { return !(a == b); }
};

struct PolyMat3Field {
  std::array<std::array<PolyScalarField, 3>, 3> m{};

  PolyMat3Field() = default;

  static PolyMat3Field constant(const Mat3& x) {
    PolyMat3Field f;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) f(i, j) = PolyScalarField::constant(x(i, j));
    return f;
  }

  PolyScalarField& operator()(int i, int j) {
    return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const PolyScalarField& operator()(int i, int j) const {
    return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  bool is_zero() const {
    for (const auto& row : m)
      for (const auto& f : row)
        if (!f.is_zero()) return false;
    return true;
  }

  int degree() const {
    int d = -1;
    for (const auto& row : m)
      for (const auto& f : row) d = std::max(d, f.degree());
    return d;
  }

  Rational max_abs_coeff() const {
    Rational mx;
    for (const auto& row : m)
      for (const auto& f : row) mx = max(mx, f.max_abs_coeff());
    return mx;
  }

  Mat3 evaluate(const Vec3& x) const {
    Mat3 v;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) v(i, j) = (*this)(i, j).evaluate(x);
    return v;
  }

  PolyVec3Field row(int i) const { return {(*this)(i, 0), (*this)(i, 1), (*this)(i, 2)}; }
  PolyVec3Field col(int j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }

  friend PolyMat3Field operator+(const PolyMat3Field& a, const PolyMat3Field& b) {
    PolyMat3Field s;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s(i, j) = a(i, j) + b(i, j);
    return s;
  }
  friend PolyMat3Field operator-(const PolyMat3Field& a, const PolyMat3Field& b) {
    PolyMat3Field s;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s(i, j) = a(i, j) - b(i, j);
    return s;
  }
  PolyMat3Field operator-() const {
    PolyMat3Field s;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s(i, j) = -(*this)(i, j);
    return s;
  }
  friend PolyMat3Field operator*(const Rational& s, const PolyMat3Field& a) {
    PolyMat3Field x;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) x(i, j) = s * a(i, j);
    return x;
  }
  friend PolyMat3Field operator*(const PolyScalarField& s, const PolyMat3Field& a) {
    PolyMat3Field x;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) x(i, j) = s * a(i, j);
    return x;
  }
  friend PolyVec3Field operator*(const PolyMat3Field& a, const PolyVec3Field& v) {
    PolyVec3Field x;
    for (int i = 0; i < 3; ++i) {
      PolyScalarField acc;
      for (int j = 0; j < 3; ++j) acc = acc + a(i, j) * v[j];
      x[i] = acc;
    }
    return x;
  }
  friend bool operator==(const PolyMat3Field& a, const PolyMat3Field& b) { return a.m == b.m; }
  friend bool operator!=(const PolyMat3Field& a, const PolyMat3Field& b) { return !(a == b); }
};

/// Third-order tensor field, components t(i,j,k) = T_ijk.
struct PolyTen3Field {
  std::array<std::array<std::array<PolyScalarField, 3>, 3>, 3> t{};

  PolyScalarField& operator()(int i, int j, int k) {
    return t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }
  const PolyScalarField& operator()(int i, int j, int k) const {
    return t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }
};

// ---------------------------------------------------------------------------
// Pointwise tensor algebra lifted to fields.
// ---------------------------------------------------------------------------

inline PolyScalarField dot(const PolyVec3Field& a, const PolyVec3Field& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline PolyVec3Field cross(const PolyVec3Field& a, const PolyVec3Field& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline PolyMat3Field transpose(const PolyMat3Field& x) {
  PolyMat3Field s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s(i, j) = x(j, i);
  return s;
}

inline PolyScalarField tr(const PolyMat3Field& x) { return x(0, 0) + x(1, 1) + x(2, 2); }

inline PolyMat3Field sym(const PolyMat3Field& x) { return Rational(1, 2) * (x + transpose(x)); }
inline PolyMat3Field skew(const PolyMat3Field& x) { return Rational(1, 2) * (x - transpose(x)); }

inline PolyMat3Field identity_field() { return PolyMat3Field::constant(Mat3::identity()); }

inline PolyMat3Field dev(const PolyMat3Field& x) {
  return x - Rational(1, 3) * (tr(x) * identity_field());
}

inline PolyMat3Field dev_sym(const PolyMat3Field& x) { return dev(sym(x)); }

inline PolyMat3Field diag_part(const PolyMat3Field& x) {
  PolyMat3Field d;
  for (int i = 0; i < 3; ++i) d(i, i) = x(i, i);
  return d;
}

/// axl of the pointwise skew part, (axl skew X) = (X32-X23, X13-X31, X21-X12)/2.
inline PolyVec3Field axl_skew(const PolyMat3Field& x) {
  return {Rational(1, 2) * (x(2, 1) - x(1, 2)), Rational(1, 2) * (x(0, 2) - x(2, 0)),
          Rational(1, 2) * (x(1, 0) - x(0, 1))};
}

inline PolyMat3Field anti(const PolyVec3Field& a) {
  PolyMat3Field x;
  x(0, 1) = -a[2];
  x(0, 2) = a[1];
  x(1, 0) = a[2];
  x(1, 2) = -a[0];
  x(2, 0) = -a[1];
  x(2, 1) = a[0];
  return x;
}

/// Frobenius inner product as a scalar field.
inline PolyScalarField inner(const PolyMat3Field& a, const PolyMat3Field& b) {
  PolyScalarField acc;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc = acc + a(i, j) * b(i, j);
  return acc;
}

inline PolyScalarField norm_sq(const PolyMat3Field& a) { return inner(a, a); }

// ---------------------------------------------------------------------------
// Differential operators.
// ---------------------------------------------------------------------------

inline PolyVec3Field grad(const PolyScalarField& f) {
  return {f.derivative(0), f.derivative(1), f.derivative(2)};
}

/// (Grad b)_ij = b_i,j.
inline PolyMat3Field grad(const PolyVec3Field& b) {
  PolyMat3Field g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = b[i].derivative(j);
  return g;
}

/// (GRAD X)_ijk = X_ij,k.
inline PolyTen3Field grad(const PolyMat3Field& x) {
  PolyTen3Field g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) g(i, j, k) = x(i, j).derivative(k);
  return g;
}

inline PolyScalarField div(const PolyVec3Field& b) {
  return b[0].derivative(0) + b[1].derivative(1) + b[2].derivative(2);
}

/// (Div X)_i = X_ij,j.
inline PolyVec3Field div(const PolyMat3Field& x) {
  PolyVec3Field d;
  for (int i = 0; i < 3; ++i)
    d[i] = x(i, 0).derivative(0) + x(i, 1).derivative(1) + x(i, 2).derivative(2);
  return d;
}

/// (DIV T)_ij = T_ijk,k.
inline PolyMat3Field div(const PolyTen3Field& t) {
  PolyMat3Field d;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      d(i, j) = t(i, j, 0).derivative(0) + t(i, j, 1).derivative(1) + t(i, j, 2).derivative(2);
  return d;
}

/// (curl v)_i = -v_a,b eps_abi; the standard right-handed curl.
inline PolyVec3Field curl(const PolyVec3Field& v) {
  return {v[2].derivative(1) - v[1].derivative(2), v[0].derivative(2) - v[2].derivative(0),
          v[1].derivative(0) - v[0].derivative(1)};
}

/// Row-wise curl of a second-order field, (Curl X)_ij = -X_ia,b eps_abj.
inline PolyMat3Field curl(const PolyMat3Field& x) {
  PolyMat3Field c;
  for (int i = 0; i < 3; ++i) {
    const PolyVec3Field r = curl(x.row(i));
    for (int j = 0; j < 3; ++j) c(i, j) = r[j];
  }
  return c;
}

/// Componentwise Laplacian of a vector field, Div Grad v.
inline PolyVec3Field laplacian(const PolyVec3Field& v) { return div(grad(v)); }

// ---------------------------------------------------------------------------
// Coordinate changes.
// ---------------------------------------------------------------------------

/// The field xi |-> Q X(Q^T xi) Q^T: the source field watched from a frame
/// rotated by the proper rotation Q. Exact polynomial composition.
inline PolyMat3Field pushforward_rotation(const PolyMat3Field& x, const Mat3& q) {
  if (!is_rotation(q)) throw std::invalid_argument("pushforward_rotation: Q is not a proper rotation");
  const Mat3 qt = transpose(q);
  PolyMat3Field composed;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) composed(i, j) = x(i, j).substitute_affine(qt, Vec3{});
  // Rotate the tensor values: Q * composed * Q^T with constant Q.
  PolyMat3Field out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      PolyScalarField acc;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          const Rational w = q(i, a) * q(j, b);
          if (!w.is_zero()) acc = acc + w * composed(a, b);
        }
      out(i, j) = acc;
    }
  return out;
}

/// Recenters a field: returns g with g(y) = f(y + x0).
inline PolyScalarField recenter(const PolyScalarField& f, const Vec3& x0) {
  return f.substitute_affine(Mat3::identity(), x0);
}

inline PolyMat3Field recenter(const PolyMat3Field& f, const Vec3& x0) {
  PolyMat3Field out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = recenter(f(i, j), x0);
  return out;
}

// ---------------------------------------------------------------------------
// Printing.
// ---------------------------------------------------------------------------

/// Compact human form, e.g. "3/2 x1^2 x3 - x2 + 1"; "0" for the zero field.
/// Terms print in descending lexicographic exponent order so leading terms
/// come first.
inline std::string to_string(const PolyScalarField& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = c.abs();
    std::string vars;
    for (int k = 0; k < 3; ++k) {
      if (e[static_cast<std::size_t>(k)] == 0) continue;
      if (!vars.empty()) vars += " ";
      vars += "x" + std::to_string(k + 1);
      if (e[static_cast<std::size_t>(k)] > 1)
        vars += "^" + std::to_string(e[static_cast<std::size_t>(k)]);
    }
    if (vars.empty()) {
      out += mag.to_string();
    } else if (mag == Rational(1)) {
      out += vars;
    } else {
      out += mag.to_string() + " " + vars;
    }
  }
  return out;
}

inline std::string to_string(const PolyVec3Field& v) {
  return "(" + to_string(v[0]) + ", " + to_string(v[1]) + ", " + to_string(v[2]) + ")";
}

inline std::string to_string(const PolyMat3Field& x) {
  std::string out = "[";
  for (int i = 0; i < 3; ++i) {
    out += "[" + to_string(x(i, 0)) + ", " + to_string(x(i, 1)) + ", " + to_string(x(i, 2)) + "]";
    if (i < 2) out += ", ";
  }
  return out + "]";
}

}  // namespace polarity
