#include <gtest/gtest.h>

#include "dopfactor/dopfactor.hpp"
#include "support/generators.hpp"

using namespace dopfactor;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Scalar> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

}  // namespace

TEST(BinomHalf, SmallValues) {
  EXPECT_EQ(binom_half(0), Rational(1));
  EXPECT_EQ(binom_half(1), make_rational(1, 2));
  EXPECT_EQ(binom_half(2), make_rational(-1, 8));
  EXPECT_EQ(binom_half(3), make_rational(1, 16));
}

// (sum_i C(1/2, i) t^i)^2 = 1 + t as formal power series.
TEST(BinomHalf, SeriesSquaresToOnePlusT) {
  for (std::size_t n = 0; n <= 20; ++n) {
    Rational acc;
    for (std::size_t i = 0; i <= n; ++i) acc += binom_half(i) * binom_half(n - i);
    EXPECT_EQ(acc, Rational(n <= 1 ? 1 : 0)) << "n=" << n;
  }
}

TEST(RationalSqrt, PerfectSquaresOnly) {
  EXPECT_EQ(*rational_sqrt(make_rational(9, 4)), make_rational(3, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(rational_sqrt(Rational(-4)).has_value());
}

TEST(QuadScalar, ThetaSquaredIsBase) {
  for (long a : {2L, 3L, -1L, 5L, 7L}) {
    const Scalar t = Scalar::theta(Rational(a));
    EXPECT_EQ(t * t, Scalar(a));
  }
  const Scalar t = Scalar::theta(make_rational(2, 3));
  EXPECT_EQ(t * t, Scalar(make_rational(2, 3)));
}

TEST(QuadScalar, SquareBaseCollapsesToRational) {
  const Scalar t = Scalar::theta(Rational(9));
  EXPECT_TRUE(t.is_rational());
  EXPECT_EQ(t, Scalar(3));
  const Scalar z(Rational(1), Rational(2), make_rational(1, 4));
  EXPECT_EQ(z, Scalar(2));
}

TEST(QuadScalar, FieldAxiomsOnRandomSamples) {
  prop::Gen g(7);
  const Rational base(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Scalar x = g.scalar(base), y = g.scalar(base), z = g.scalar(base);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + y, y + x);
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inverse(), Scalar(1));
    }
  }
}

TEST(QuadScalar, MixingFieldsThrows) {
  EXPECT_THROW(Scalar::theta(Rational(2)) + Scalar::theta(Rational(3)), std::domain_error);
  EXPECT_THROW(Scalar(0).inverse(), std::domain_error);
}

TEST(QuadScalar, FieldSqrt) {
  const Rational two(2);
  EXPECT_EQ(*field_sqrt(Scalar(8), two), Scalar(Rational(0), Rational(2), two));
  EXPECT_EQ(*field_sqrt(Scalar(4), Rational(0)), Scalar(2));
  EXPECT_FALSE(field_sqrt(Scalar(3), two).has_value());
  EXPECT_FALSE(field_sqrt(Scalar(2), Rational(0)).has_value());
  // (1 + sqrt(2))^2 = 3 + 2 sqrt(2)
  const Scalar c(Rational(3), Rational(2), two);
  const Scalar r = *field_sqrt(c, two);
  EXPECT_EQ(r * r, c);
}

TEST(QuadScalar, NaturalNumberDetection) {
  EXPECT_EQ(*Scalar(5).as_natural(), 5);
  EXPECT_FALSE(Scalar(-1).as_natural());
  EXPECT_FALSE(Scalar(make_rational(1, 2)).as_natural());
  EXPECT_FALSE(Scalar::theta(Rational(2)).as_natural());
}

TEST(Polynomial, ZeroHasMinusInfinityDegree) {
  const Poly zero;
  EXPECT_TRUE(zero.degree().is_minus_infinity());
  EXPECT_LT(zero.degree(), Degree(0));
  EXPECT_THROW(zero.degree().value(), std::domain_error);
  EXPECT_EQ(Poly(Scalar(0)), zero);
  EXPECT_TRUE((zero * P({1, 1})).degree().is_minus_infinity());
}

TEST(Polynomial, Derivative) {
  EXPECT_EQ(derivative(P({-3, 0, 1})), P({0, 2}));
  EXPECT_EQ(derivative(P({7})), Poly());
}

TEST(Polynomial, ComposeShift) {
  EXPECT_EQ(compose_shift(P({0, 0, 1}), Scalar(1)), P({1, 2, 1}));
  EXPECT_EQ(compose_shift(P({5, 3, 0, 2}), Scalar(0)), P({5, 3, 0, 2}));
}

TEST(Polynomial, Gcd) {
  EXPECT_EQ(gcd(P({-1, 0, 1}), P({-1, 1})), P({-1, 1}));
  EXPECT_EQ(gcd(P({2, 2}), P({3, 3})), P({1, 1}));
  EXPECT_EQ(gcd(P({1, 0, 1}), P({-1, 1})), P({1}));
}

TEST(Polynomial, ExactDivision) {
  EXPECT_EQ(exact_divide(P({-1, 0, 1}), P({-1, 1})), P({1, 1}));
  EXPECT_THROW(exact_divide(P({1, 0, 1}), P({-1, 1})), InexactDivision);
  EXPECT_THROW(divmod(P({1}), Poly()), std::domain_error);
}

TEST(Polynomial, DivmodIdentityAndDegreeAdditivity) {
  prop::Gen g(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = g.poly(6), b = g.poly(4);
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).degree(), Degree(a.degree().value() + b.degree().value()));
    }
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(Polynomial, EvaluateHorner) { EXPECT_EQ(P({1, -2, 3})(Scalar(2)), Scalar(9)); }

TEST(RationalFunction, ReducesAndNormalizesDenominator) {
  const RatFn f(P({-2, 0, 2}), P({-3, 3}));  // 2(x^2-1) / 3(x-1) = (2/3)(x+1)
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.num(), Poly(std::vector<Scalar>{Scalar(make_rational(2, 3)), Scalar(make_rational(2, 3))}));
  EXPECT_THROW(RatFn(P({1}), Poly()), std::domain_error);
  EXPECT_EQ(RatFn(Poly(), P({1, 1})).den(), P({1}));
}

TEST(RationalFunction, NormalizationIdempotentAndArithmetic) {
  prop::Gen g(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly n = g.poly(3), d = g.poly(3);
    if (d.is_zero()) continue;
    const RatFn f(n, d);
    EXPECT_EQ(f.normalized(), f);
    EXPECT_EQ(f.normalized().normalized(), f.normalized());
    EXPECT_TRUE(gcd(f.num(), f.den()).is_constant());
    EXPECT_EQ(f.den().leading(), Scalar(1));
    if (!f.is_zero()) {
      EXPECT_EQ(f * (RatFn(1) / f), RatFn(1));
    }
    // quotient rule against product rule: (f * d)' = f' d + f d'
    EXPECT_EQ(derivative(f * RatFn(d)), derivative(f) * RatFn(d) + f * RatFn(derivative(d)));
  }
}

TEST(Matrix, BareissMatchesCofactorOnRandomIntegerMatrices) {
  prop::Gen g(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 6));
    Matrix<BigInt> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = g.integer(0, 3) == 0 ? 0 : g.integer(-9, 9);
    EXPECT_EQ(bareiss_determinant(m), cofactor_determinant(m));
  }
}

TEST(Matrix, BareissNeedsPivoting) {
  Matrix<BigInt> m(2, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  EXPECT_EQ(bareiss_determinant(m), -1);
}

TEST(Matrix, NullspaceBasis) {
  prop::Gen g(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = static_cast<std::size_t>(g.integer(1, 5)), c = static_cast<std::size_t>(g.integer(1, 5));
    Matrix<Scalar> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = g.integer(0, 2) == 0 ? Scalar(0) : Scalar(g.rational());
    const auto basis = nullspace(m);
    for (const auto& v : basis) {
      for (std::size_t i = 0; i < r; ++i) {
        Scalar acc;
        for (std::size_t j = 0; j < c; ++j) acc += m(i, j) * v[j];
        EXPECT_TRUE(acc.is_zero());
      }
    }
    // rank-nullity against the determinant when square
    if (r == c) {
      Matrix<BigInt> scaled(r, c);
      bool integral = true;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
          Rational x = m(i, j).rational_part() * 12;
          integral = integral && is_integer(x);
          scaled(i, j) = x.get_num();
        }
      ASSERT_TRUE(integral);
      EXPECT_EQ(basis.empty(), bareiss_determinant(scaled) != 0);
    }
  }
}
