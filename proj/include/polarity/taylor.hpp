#pragma once

/// @file taylor.hpp
/// Second-order Taylor decomposition of a total-stress field at a cube
/// center, the split of its terms by how their tractions load the cube
/// faces, polarity classification of each piece, and the couple-stress
/// tensor m extracted from first stress gradients, together with the
/// second-gradient tensors chi and psi and the angular-momentum residual.
///
/// The expansion about x0 (writing D for x - x0) is
///   sigma(x0 + D) = sigma0 + sum_k sigma,k D_k
///                 + sum_{k<l} sigma,kl D_k D_l + 1/2 sum_k sigma,kk D_k^2
/// and the linear term splits into
///   np : entry (i,j) varying along its own plane normal   (sigma_ij,j)
///   p1 : shear entries varying along their traction direction (sigma_ij,i)
///   p2 : the remaining transverse gradients
/// while the mixed bilinear term splits into b1/b2 by the index rule
///   b2 : j in {k,l} and (i = j or i not in {k,l}),   b1 : the rest.
/// The pure-quadratic remainder is kept whole as the q piece.
///
/// Polarity is *computed*, never assumed: a piece is tested for
///   criterion A - some face transmits a couple about its own center,
///   criterion B - the boundary tractions carry net moment about x0,
/// and classified Polar (A, not B), Nonpolar (neither), Semipolar (B only)
/// or Bipolar (both). The library's test suite then proves the expected
/// class of each split as a theorem over random fields.

#include <array>
#include <stdexcept>
#include <utility>

#include "polarity/cube.hpp"
#include "polarity/field.hpp"
#include "polarity/rational.hpp"
#include "polarity/tensor.hpp"

namespace polarity {

struct TaylorDecomposition {
  Mat3 sigma0;                     ///< sigma(x0)
  std::array<Mat3, 3> d1;          ///< d1[k](i,j) = sigma_ij,k at x0
  std::array<Mat3, 3> d2_mixed;    ///< pairs (0,1), (0,2), (1,2): sigma_ij,kl at x0
  std::array<Mat3, 3> d2_pure;     ///< d2_pure[k](i,j) = sigma_ij,kk at x0
  Vec3 x0;
  Rational L_c;
};

/// Index of the mixed pair {k,l}, k < l, in d2_mixed.
inline int mixed_pair_index(int k, int l) {
  if (k == 0 && l == 1) return 0;
  if (k == 0 && l == 2) return 1;
  if (k == 1 && l == 2) return 2;
  throw std::invalid_argument("mixed_pair_index: need 0 <= k < l <= 2");
}

inline std::pair<int, int> mixed_pair(int idx) {
  switch (idx) {
    case 0: return {0, 1};
    case 1: return {0, 2};
    case 2: return {1, 2};
    default: throw std::invalid_argument("mixed_pair: index out of range");
  }
}

/// Exact derivatives of sigma at x0, truncated beyond second order.
inline TaylorDecomposition expand(const PolyMat3Field& sigma, const Vec3& x0, const Rational& l_c) {
  if (!(l_c > Rational(0))) throw std::invalid_argument("expand: L_c must be positive");
  TaylorDecomposition t;
  t.sigma0 = sigma.evaluate(x0);
  t.x0 = x0;
  t.L_c = l_c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const std::array<PolyScalarField, 3> first = {sigma(i, j).derivative(0), sigma(i, j).derivative(1),
                                                    sigma(i, j).derivative(2)};
      for (int k = 0; k < 3; ++k) {
        t.d1[static_cast<std::size_t>(k)](i, j) = first[static_cast<std::size_t>(k)].evaluate(x0);
        t.d2_pure[static_cast<std::size_t>(k)](i, j) =
            first[static_cast<std::size_t>(k)].derivative(k).evaluate(x0);
      }
      for (int p = 0; p < 3; ++p) {
        const auto [k, l] = mixed_pair(p);
        t.d2_mixed[static_cast<std::size_t>(p)](i, j) =
            first[static_cast<std::size_t>(k)].derivative(l).evaluate(x0);
      }
    }
  return t;
}

/// Largest |coefficient| among the discarded (order >= 3) terms of sigma
/// recentred at x0; zero whenever deg sigma <= 2.
inline Rational truncation_error(const PolyMat3Field& sigma, const Vec3& x0) {
  Rational worst;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const PolyScalarField centred = recenter(sigma(i, j), x0);
      const PolyScalarField discarded = centred - centred.truncate_degree(2);
      worst = max(worst, discarded.max_abs_coeff());
    }
  return worst;
}

namespace detail {

/// The lever coordinate D_k = x_k - x0_k as a field.
inline PolyScalarField delta(const Vec3& x0, int k) {
  return PolyScalarField::variable(k) - PolyScalarField::constant(x0[k]);
}

}  // namespace detail

inline PolyMat3Field constant_piece(const TaylorDecomposition& t) {
  return PolyMat3Field::constant(t.sigma0);
}

struct LinearSplit {
  PolyMat3Field np;  ///< sigma_ij,j D_j: each column varies along its own normal
  PolyMat3Field p1;  ///< sigma_ij,i D_i (i != j): shears varying along their direction of action
  PolyMat3Field p2;  ///< everything else in the linear term
};

inline LinearSplit split_linear(const TaylorDecomposition& t) {
  LinearSplit s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const Rational& g = t.d1[static_cast<std::size_t>(k)](i, j);
        if (g.is_zero()) continue;
        const PolyScalarField term = g * detail::delta(t.x0, k);
        if (k == j) {
          s.np(i, j) = s.np(i, j) + term;
        } else if (k == i) {
          s.p1(i, j) = s.p1(i, j) + term;
        } else {
          s.p2(i, j) = s.p2(i, j) + term;
        }
      }
  return s;
}

struct BilinearSplit {
  PolyMat3Field b1;  ///< mixed terms whose face loads stay couple-free
  PolyMat3Field b2;  ///< mixed terms feeding the divergence of the couple stress
};

inline BilinearSplit split_bilinear(const TaylorDecomposition& t) {
  BilinearSplit s;
  for (int p = 0; p < 3; ++p) {
    const auto [k, l] = mixed_pair(p);
    const PolyScalarField dkl = detail::delta(t.x0, k) * detail::delta(t.x0, l);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Rational& g = t.d2_mixed[static_cast<std::size_t>(p)](i, j);
        if (g.is_zero()) continue;
        const PolyScalarField term = g * dkl;
        const bool j_in_pair = (j == k || j == l);
        const bool i_in_pair = (i == k || i == l);
        if (j_in_pair && (i == j || !i_in_pair)) {
          s.b2(i, j) = s.b2(i, j) + term;
        } else {
          s.b1(i, j) = s.b1(i, j) + term;
        }
      }
  }
  return s;
}

/// The pure-quadratic piece 1/2 sum_k sigma,kk D_k^2.
inline PolyMat3Field quadratic_piece(const TaylorDecomposition& t) {
  PolyMat3Field q;
  for (int k = 0; k < 3; ++k) {
    const PolyScalarField dk2 = Rational(1, 2) * (detail::delta(t.x0, k) * detail::delta(t.x0, k));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Rational& g = t.d2_pure[static_cast<std::size_t>(k)](i, j);
        if (!g.is_zero()) q(i, j) = q(i, j) + g * dk2;
      }
  }
  return q;
}

/// The truncated field itself: constant + linear + bilinear + quadratic.
inline PolyMat3Field reconstruct(const TaylorDecomposition& t) {
  const LinearSplit lin = split_linear(t);
  const BilinearSplit bil = split_bilinear(t);
  return constant_piece(t) + lin.np + lin.p1 + lin.p2 + bil.b1 + bil.b2 + quadratic_piece(t);
}

enum class PolarityClass { Nonpolar, Polar, Semipolar, Bipolar };

inline const char* to_string(PolarityClass c) {
  switch (c) {
    case PolarityClass::Nonpolar: return "nonpolar";
    case PolarityClass::Polar: return "polar";
    case PolarityClass::Semipolar: return "semipolar";
    case PolarityClass::Bipolar: return "bipolar";
  }
  return "?";
}

struct PolarityEvidence {
  std::array<Vec3, kFaceCount> face_couples;  ///< about each face center
  Vec3 angular_sum;                           ///< total moment about the cube center
  bool any_face_couple = false;               ///< criterion A
  bool net_moment = false;                    ///< criterion B
  PolarityClass cls = PolarityClass::Nonpolar;
};

/// Classifies a stress piece by the two computed integral criteria.
inline PolarityEvidence classify_with_evidence(const PolyMat3Field& term, const Cube& cube) {
  PolarityEvidence ev;
  for (int f = 0; f < kFaceCount; ++f) {
    ev.face_couples[static_cast<std::size_t>(f)] = face_couple_about_face_center(term, cube, f);
    if (!ev.face_couples[static_cast<std::size_t>(f)].is_zero()) ev.any_face_couple = true;
  }
  ev.angular_sum = face_couple_about_cube_center(term, cube);
  ev.net_moment = !ev.angular_sum.is_zero();
  if (ev.any_face_couple) {
    ev.cls = ev.net_moment ? PolarityClass::Bipolar : PolarityClass::Polar;
  } else {
    ev.cls = ev.net_moment ? PolarityClass::Semipolar : PolarityClass::Nonpolar;
  }
  return ev;
}

inline PolarityClass classify(const PolyMat3Field& term, const Cube& cube) {
  return classify_with_evidence(term, cube).cls;
}

namespace detail {

/// The couple-stress entry pattern from first stress gradients. d(i,j,k)
/// must return sigma_ij,k; the factor L_c^2/12 is applied by the callers.
template <typename Deriv, typename Value>
void couple_stress_pattern(const Deriv& d, std::array<std::array<Value, 3>, 3>& m) {
  m[0][0] = d(2, 0, 1) - d(1, 0, 2);  // sigma_31,2 - sigma_21,3
  m[0][1] = -d(1, 1, 2);              // -sigma_22,3
  m[0][2] = d(2, 2, 1);               // sigma_33,2
  m[1][0] = d(0, 0, 2);               // sigma_11,3
  m[1][1] = d(0, 1, 2) - d(2, 1, 0);  // sigma_12,3 - sigma_32,1
  m[1][2] = -d(2, 2, 0);              // -sigma_33,1
  m[2][0] = -d(0, 0, 1);              // -sigma_11,2
  m[2][1] = d(1, 1, 0);               // sigma_22,1
  m[2][2] = d(1, 2, 0) - d(0, 2, 1);  // sigma_23,1 - sigma_13,2
}

}  // namespace detail

/// The constant couple-stress tensor of the expansion point:
///   m = (L_c^2/12) * [pattern of first stress gradients],
/// whose column i times the face area L_c^2 reproduces the exact face-i
/// couple integral of the p2 piece.
inline Mat3 couple_stress_from_gradients(const TaylorDecomposition& t) {
  std::array<std::array<Rational, 3>, 3> pat;
  detail::couple_stress_pattern(
      [&t](int i, int j, int k) { return t.d1[static_cast<std::size_t>(k)](i, j); }, pat);
  Mat3 m;
  const Rational scale = t.L_c * t.L_c / Rational(12);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = scale * pat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

/// The same pattern applied pointwise, giving the couple-stress *field* of a
/// polynomial stress field.
inline PolyMat3Field couple_stress_field(const PolyMat3Field& sigma, const Rational& l_c) {
  std::array<std::array<PolyScalarField, 3>, 3> pat;
  detail::couple_stress_pattern(
      [&sigma](int i, int j, int k) { return sigma(i, j).derivative(k); }, pat);
  PolyMat3Field m;
  const Rational scale = l_c * l_c / Rational(12);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = scale * pat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

/// Diagonal (torsion) and off-diagonal (bending) parts of a couple stress.
inline std::pair<Mat3, Mat3> split_torsion_bending(const Mat3& m) {
  const Mat3 torsion = diag_part(m);
  return {torsion, m - torsion};
}

/// chi_ik = (L_c^2/12) sigma_ik,kk at x0 with k FIXED per entry (no sum):
/// each entry pairs a stress component with the repeated derivative along
/// its own plane normal. This is the pure-quadratic contribution to the
/// angular balance, and it transforms objectively under rotations.
inline Mat3 chi(const PolyMat3Field& sigma, const Vec3& x0, const Rational& l_c) {
  Mat3 c;
  const Rational scale = l_c * l_c / Rational(12);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      c(i, k) = scale * sigma(i, k).derivative(k).derivative(k).evaluate(x0);
  return c;
}

/// psi = (L_c^2/24) Grad(2 axl skew sigma); vanishes for symmetric sigma.
inline PolyMat3Field psi(const PolyMat3Field& sigma, const Rational& l_c) {
  const PolyVec3Field twice_axial = Rational(2) * axl_skew(sigma);
  return (l_c * l_c / Rational(24)) * grad(twice_axial);
}

/// Angular-momentum residual of the truncated expansion at the cube center:
///   Div m + Div psi + 2 axl skew(sigma0 + chi) + c,
/// where m and psi are the fields built from the truncated stress and c is
/// the constant applied body couple. The boundary-integral route
///   (1/V_c) sum_f int (x - x0) cross (sigma . n_f) dA  + c
/// over the constant + b2 + q pieces gives the same vector; the test suite
/// checks the two paths against each other.
inline Vec3 angular_balance_residual(const PolyMat3Field& sigma, const Cube& cube, const Vec3& c) {
  const TaylorDecomposition t = expand(sigma, cube.center, cube.edge);
  const PolyMat3Field trunc = reconstruct(t);
  const PolyMat3Field m = couple_stress_field(trunc, cube.edge);
  const PolyMat3Field p = psi(trunc, cube.edge);
  const Mat3 x = chi(trunc, cube.center, cube.edge);
  const Vec3 div_m = div(m).evaluate(cube.center);
  const Vec3 div_psi = div(p).evaluate(cube.center);
  const Vec3 skew_term = Rational(2) * axl_skew(t.sigma0 + x);
  return div_m + div_psi + skew_term + c;
}

struct GradTrSplit {
  PolyVec3Field div_diag;       ///< Div(diagonal part of sigma)
  PolyVec3Field axl_skew_term;  ///< (24/L_c^2) axl(skew m-field)
};

/// Splits grad(tr sigma) = Div(Diag sigma) + (24/L_c^2) axl(skew m); the sum
/// is an exact pointwise identity for every polynomial stress field, showing
/// that the skew part of m carries the non-normal gradients of the normal
/// stresses.
inline GradTrSplit grad_tr_decomposition(const PolyMat3Field& sigma, const Rational& l_c) {
  GradTrSplit s;
  s.div_diag = div(diag_part(sigma));
  const PolyMat3Field m = couple_stress_field(sigma, l_c);
  s.axl_skew_term = (Rational(24) / (l_c * l_c)) * axl_skew(m);
  return s;
}

/// The three normal-stress gradient conditions equivalent to m = m^T:
///   sigma_11,3 = -sigma_22,3,  -sigma_11,2 = sigma_33,2,  sigma_22,1 = -sigma_33,1,
/// evaluated at x0.
inline bool symmetry_conditions_check(const PolyMat3Field& sigma, const Vec3& x0) {
  const Rational s11_3 = sigma(0, 0).derivative(2).evaluate(x0);
  const Rational s22_3 = sigma(1, 1).derivative(2).evaluate(x0);
  const Rational s11_2 = sigma(0, 0).derivative(1).evaluate(x0);
  const Rational s33_2 = sigma(2, 2).derivative(1).evaluate(x0);
  const Rational s22_1 = sigma(1, 1).derivative(0).evaluate(x0);
  const Rational s33_1 = sigma(2, 2).derivative(0).evaluate(x0);
  return (s11_3 + s22_3).is_zero() && (s11_2 + s33_2).is_zero() && (s22_1 + s33_1).is_zero();
}

/// Per-axis coplanar-shear-gradient balance at x0: the two shear gradients
/// feeding the diagonal couple m_kk contribute equally, which makes the
/// face-k shear pattern invariant under quarter-turns about e_k:
///   axis 1: sigma_31,2 = -sigma_21,3
///   axis 2: sigma_12,3 = -sigma_32,1
///   axis 3: sigma_23,1 = -sigma_13,2
inline std::array<bool, 3> rotational_invariance_axes(const PolyMat3Field& sigma, const Vec3& x0) {
  const auto zero_sum = [&](int ai, int aj, int ak, int bi, int bj, int bk) {
    return (sigma(ai, aj).derivative(ak).evaluate(x0) + sigma(bi, bj).derivative(bk).evaluate(x0))
        .is_zero();
  };
  return {zero_sum(2, 0, 1, 1, 0, 2), zero_sum(0, 1, 2, 2, 1, 0), zero_sum(1, 2, 0, 0, 2, 1)};
}

/// All three axis conditions at once.
inline bool rotational_invariance_check(const PolyMat3Field& sigma, const Vec3& x0) {
  const auto axes = rotational_invariance_axes(sigma, x0);
  return axes[0] && axes[1] && axes[2];
}

}  // namespace polarity
