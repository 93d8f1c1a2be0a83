// Polynomial fields: canonical sparse form, algebra, differential operators,
// substitution, and the orientation pins of curl.

#include "polarity/field.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace polarity {
namespace {

PolyScalarField x1() { return PolyScalarField::variable(0); }
PolyScalarField x2() { return PolyScalarField::variable(1); }
PolyScalarField x3() { return PolyScalarField::variable(2); }

TEST(ScalarField, CanonicalForm) {
  const PolyScalarField f = x1() - x1();
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.degree(), -1);
  EXPECT_TRUE(f.terms().empty());

  const PolyScalarField g = Rational(2) * x1() + Rational(-2) * x1() + x2();
  EXPECT_EQ(g, x2());
  EXPECT_EQ(g.degree(), 1);
}

TEST(ScalarField, MonomialRejectsNegativeExponents) {
  EXPECT_THROW(PolyScalarField::monomial(Rational(1), {-1, 0, 0}), std::invalid_argument);
}

TEST(ScalarField, ProductsAndBinomial) {
  const PolyScalarField f = x1() + x2();
  const PolyScalarField sq = f * f;
  EXPECT_EQ(sq.coeff({2, 0, 0}), Rational(1));
  EXPECT_EQ(sq.coeff({1, 1, 0}), Rational(2));
  EXPECT_EQ(sq.coeff({0, 2, 0}), Rational(1));
  EXPECT_EQ(sq.degree(), 2);
  EXPECT_EQ(sq.coeff({0, 0, 0}), Rational(0));
}

TEST(ScalarField, DerivativeAndEvaluate) {
  // f = x1^2 x2 - 3 x3
  const PolyScalarField f = x1() * x1() * x2() - Rational(3) * x3();
  EXPECT_EQ(f.derivative(0), Rational(2) * (x1() * x2()));
  EXPECT_EQ(f.derivative(1), x1() * x1());
  EXPECT_EQ(f.derivative(2), PolyScalarField::constant(Rational(-3)));
  const Vec3 p{Rational(1, 2), Rational(-1), Rational(2)};
  EXPECT_EQ(f.evaluate(p), Rational(1, 4) * Rational(-1) - Rational(6));
}

TEST(ScalarField, TruncateAndMaxCoeff) {
  const PolyScalarField f =
      PolyScalarField::monomial(Rational(5, 2), {3, 0, 0}) + x1() * x2() - Rational(7) * x3();
  EXPECT_EQ(f.truncate_degree(2), x1() * x2() - Rational(7) * x3());
  EXPECT_EQ(f.truncate_degree(0), PolyScalarField{});
  EXPECT_EQ(f.max_abs_coeff(), Rational(7));
}

TEST(ScalarField, SubstituteCoordinateAndAffine) {
  const PolyScalarField f = x1() * x3() + x3() * x3();
  EXPECT_EQ(f.substitute_coordinate(2, Rational(1, 2)),
            Rational(1, 2) * x1() + PolyScalarField::constant(Rational(1, 4)));

  // f(Mx + t) with M a quarter turn about e3 and t = e1: x1 -> -x2 + 1.
  Mat3 m;
  m(0, 1) = Rational(-1);
  m(1, 0) = Rational(1);
  m(2, 2) = Rational(1);
  const Vec3 t{Rational(1), Rational(0), Rational(0)};
  EXPECT_EQ(x1().substitute_affine(m, t), Rational(-1) * x2() + PolyScalarField::constant(Rational(1)));
}

TEST(ScalarField, RecenterShiftsArgument) {
  const PolyScalarField f = x1() * x1();
  const Vec3 x0{Rational(1), Rational(0), Rational(0)};
  // g(y) = f(y + x0) = y1^2 + 2 y1 + 1
  EXPECT_EQ(recenter(f, x0),
            x1() * x1() + Rational(2) * x1() + PolyScalarField::constant(Rational(1)));
}

TEST(VectorField, GradLayoutIsRowGradient) {
  // (Grad b)_ij = b_i,j
  const PolyVec3Field b{x2() * x3(), x1(), PolyScalarField{}};
  const PolyMat3Field g = grad(b);
  EXPECT_EQ(g(0, 1), x3());
  EXPECT_EQ(g(0, 2), x2());
  EXPECT_EQ(g(1, 0), PolyScalarField::constant(Rational(1)));
  EXPECT_TRUE(g(2, 2).is_zero());
}

TEST(VectorField, CurlOrientationPins) {
  // Rigid rotation about e3: v = (-x2, x1, 0) has curl (0, 0, 2).
  const PolyVec3Field rigid{Rational(-1) * x2(), x1(), PolyScalarField{}};
  EXPECT_EQ(curl(rigid), PolyVec3Field::constant(Vec3{Rational(0), Rational(0), Rational(2)}));

  // v = (0, 0, x1 x2) has curl (x1, -x2, 0).
  const PolyVec3Field v{PolyScalarField{}, PolyScalarField{}, x1() * x2()};
  EXPECT_EQ(curl(v), (PolyVec3Field{x1(), Rational(-1) * x2(), PolyScalarField{}}));

  // Componentwise: (curl v)_3 = v_2,1 - v_1,2.
  const PolyVec3Field w{x2() * x2(), x1() * x3(), PolyScalarField{}};
  EXPECT_EQ(curl(w)[2], w[1].derivative(0) - w[0].derivative(1));
}

TEST(VectorField, CurlIsTwiceAxialOfSkewGradient) {
  const PolyVec3Field v{x1() * x2(), x3() * x3(), x1() + x2() * x3()};
  EXPECT_EQ(curl(v), Rational(2) * axl_skew(grad(v)));
}

TEST(VectorField, DivAndLaplacian) {
  const PolyVec3Field v{x1() * x1(), x2() * x3(), x3()};
  EXPECT_EQ(div(v), Rational(2) * x1() + x3() + PolyScalarField::constant(Rational(1)));
  // Lap(x1^2, 0, 0) = (2, 0, 0).
  const PolyVec3Field u{x1() * x1(), PolyScalarField{}, PolyScalarField{}};
  EXPECT_EQ(laplacian(u), PolyVec3Field::constant(Vec3{Rational(2), Rational(0), Rational(0)}));
}

TEST(TensorField, DivergenceContractsSecondIndex) {
  // (Div X)_i = X_ij,j
  PolyMat3Field x;
  x(0, 0) = x1() * x2();  // contributes x2 to row 0
  x(0, 2) = x3() * x3();  // contributes 2 x3 to row 0
  x(1, 1) = x2();         // contributes 1 to row 1
  const PolyVec3Field d = div(x);
  EXPECT_EQ(d[0], x2() + Rational(2) * x3());
  EXPECT_EQ(d[1], PolyScalarField::constant(Rational(1)));
  EXPECT_TRUE(d[2].is_zero());
}

TEST(TensorField, RowWiseCurl) {
  // Row i of Curl X is the curl of row i.
  PolyMat3Field x;
  x(1, 0) = Rational(-1) * x2();
  x(1, 1) = x1();
  const PolyMat3Field c = curl(x);
  EXPECT_EQ(c(1, 2), PolyScalarField::constant(Rational(2)));
  EXPECT_TRUE(c(0, 0).is_zero() && c(2, 2).is_zero());
}

TEST(TensorField, SecondGradientMixedPartialsCommute) {
  PolyMat3Field x;
  x(0, 0) = x1() * x1() * x2();
  x(2, 1) = x2() * x3();
  const PolyTen3Field g = grad(x);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        EXPECT_EQ(g(i, j, k).derivative((k + 1) % 3), grad(x)(i, j, (k + 1) % 3).derivative(k));
}

TEST(TensorField, PushforwardRotationMovesSupportAndFrame) {
  // sigma = x1 e1 (x) e1 seen from a quarter turn about e3 becomes x2 e2 (x) e2.
  PolyMat3Field sigma;
  sigma(0, 0) = x1();
  Mat3 q;
  q(0, 1) = Rational(-1);
  q(1, 0) = Rational(1);
  q(2, 2) = Rational(1);
  const PolyMat3Field moved = pushforward_rotation(sigma, q);
  PolyMat3Field expected;
  expected(1, 1) = x2();
  EXPECT_EQ(moved, expected);
  EXPECT_THROW(pushforward_rotation(sigma, Rational(2) * Mat3::identity()), std::invalid_argument);
}

TEST(TensorField, PushforwardPreservesInvariants) {
  PolyMat3Field sigma;
  sigma(0, 1) = x1() * x3();
  sigma(1, 0) = Rational(-2) * x2();
  sigma(2, 2) = x1() + x2();
  const Mat3 q = axis_rotation(2, Rational(3, 5), Rational(4, 5));
  const PolyMat3Field moved = pushforward_rotation(sigma, q);
  // The trace is a scalar invariant: tr sigma' (xi) = tr sigma (Q^T xi).
  EXPECT_EQ(tr(moved), tr(sigma).substitute_affine(transpose(q), Vec3{}));
}

TEST(Printing, CompactForms) {
  EXPECT_EQ(to_string(PolyScalarField{}), "0");
  const PolyScalarField f =
      Rational(3, 2) * (x1() * x1() * x3()) - x2() + PolyScalarField::constant(Rational(1));
  EXPECT_EQ(to_string(f), "3/2 x1^2 x3 - x2 + 1");
}

}  // namespace
}  // namespace polarity
