#include <gtest/gtest.h>

#include "dopfactor/dopfactor.hpp"
#include "support/generators.hpp"

using namespace dopfactor;

namespace {

Poly P(std::initializer_list<Rational> c) {
  std::vector<Scalar> v;
  for (const auto& x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

Rational Q(long n, long d = 1) { return make_rational(n, d); }

// R^2 - Q has degree < m exactly when R is the polynomial part of sqrt(Q).
bool is_truncated_root(const Poly& r, const Poly& q) {
  const std::size_t m = q.degree().value() / 2;
  return (r * r - q).degree() < Degree(m);
}

}  // namespace

TEST(SqrtTruncate, HermitePotential) {
  const Poly q = P({Q(1), Q(0), Q(1)});
  EXPECT_EQ(sqrt_truncate(q, 1, 0).r, P({Q(0), Q(1)}));
  EXPECT_EQ(sqrt_truncate(q, -1, 0).r, P({Q(0), Q(-1)}));
  EXPECT_EQ(sqrt_truncate(q, -1, 0).epsilon, -1);
}

TEST(SqrtTruncate, QuarticWithCubicTerm) {
  // 4x^4 + 3x^3: r2 = 2, r1 = 3/4, r0 = -9/64
  const Poly q = P({Q(0), Q(0), Q(0), Q(3), Q(4)});
  EXPECT_EQ(sqrt_truncate(q, 1, 0).r, P({Q(-9, 64), Q(3, 4), Q(2)}));
  EXPECT_EQ(sqrt_truncate(q, -1, 0).r, P({Q(9, 64), Q(-3, 4), Q(-2)}));
}

TEST(SqrtTruncate, NeedsSquareLeadingCoefficient) {
  const Poly q = P({Q(0), Q(0), Q(2)});
  EXPECT_THROW(sqrt_truncate(q, 1, 0), FieldExtensionRequired);
  EXPECT_THROW(sqrt_truncate(q, 1, 3), FieldExtensionRequired);
  const auto br = sqrt_truncate(q, 1, 2);
  EXPECT_EQ(br.r, Poly::monomial(Scalar::theta(2), 1));
}

TEST(SqrtTruncate, RejectsBadInput) {
  EXPECT_THROW(sqrt_truncate(P({Q(0), Q(1)}), 1, 0), std::invalid_argument);
  EXPECT_THROW(sqrt_truncate(P({Q(0), Q(0), Q(0), Q(1)}), 1, 0), RamifiedBranch);
  EXPECT_THROW(sqrt_truncate(P({Q(0), Q(0), Q(1)}), 0, 0), std::invalid_argument);
}

TEST(SqrtTruncate, ExactSquaresRecoverTheRoot) {
  prop::Gen g(31);
  for (int t = 0; t < 200; ++t) {
    Poly root = g.poly(4);
    if (root.degree() < Degree(1)) continue;
    // force a square leading coefficient
    std::vector<Scalar> c(root.coefficients().begin(), root.coefficients().end());
    c.back() = Scalar(g.nonzero_rational());
    root = Poly(c);
    const Poly q = root * root;
    const auto plus = sqrt_truncate(q, 1, 0).r, minus = sqrt_truncate(q, -1, 0).r;
    EXPECT_TRUE(plus == root || plus == -root);
    EXPECT_EQ(minus, -plus);
  }
}

TEST(SqrtTruncate, DefiningPropertyOnRandomPotentials) {
  prop::Gen g(32);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = static_cast<std::size_t>(g.integer(1, 4));
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < 2 * m; ++i) c.emplace_back(g.rational());
    const Rational s = g.nonzero_rational();
    c.emplace_back(s * s);
    const Poly q(c);
    for (int eps : {1, -1}) {
      const Poly r = sqrt_truncate(q, eps, 0).r;
      EXPECT_TRUE(is_truncated_root(r, q));
      EXPECT_EQ(r.leading(), Scalar(Rational(eps * abs(s))));
    }
  }
}

TEST(SqrtTruncate, DefiningPropertyOverQuadraticField) {
  prop::Gen g(33);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational base(g.integer(0, 1) ? 2 : 5);
    std::vector<Scalar> c;
    for (int i = 0; i < 4; ++i) c.push_back(g.scalar(base));
    const Rational t2 = g.nonzero_rational();
    c.emplace_back(base * t2 * t2);
    const Poly q(c);
    EXPECT_TRUE(is_truncated_root(sqrt_truncate(q, 1, base).r, q));
  }
}

// Coefficients from the binomial series against the recursive solve.
TEST(SetoyanagiR, MatchesSqrtTruncate) {
  prop::Gen g(34);
  for (int t = 0; t < 200; ++t) {
    const std::size_t p = 2 * static_cast<std::size_t>(g.integer(1, 4));
    const std::size_t q = static_cast<std::size_t>(g.integer(0, static_cast<long>(p) - 1));
    const Rational s = g.nonzero_rational();
    SetoyanagiParams params{Scalar(s * s), Scalar(g.nonzero_rational()), p, q};
    for (int eps : {1, -1})
      EXPECT_EQ(setoyanagi_r(params, eps, 0).r, sqrt_truncate(params.potential(), eps, 0).r)
          << "p=" << p << " q=" << q;
  }
}

TEST(SetoyanagiR, S43Example) {
  SetoyanagiParams params{Scalar(1), Scalar(2), 4, 3};
  EXPECT_EQ(setoyanagi_r(params, 1, 0).r, P({Q(-1, 2), Q(1), Q(1)}));
  EXPECT_EQ(params.m(), 2u);
  EXPECT_EQ(params.r(), 2u);
  EXPECT_EQ(*params.s(), 3u);
}

// After x -> x - b/(4a) the root is sqrt(a) (x^2 - 3 b^2 / (16 a^2)).
TEST(SetoyanagiR, TranslatedS43) {
  for (auto [a, b] : {std::pair{4L, 8L}, {4L, 3L}, {1L, 2L}, {9L, 1L}, {25L, -7L}}) {
    const Poly q = P({Q(0), Q(0), Q(0), Q(b), Q(a)});
    const Poly shifted = compose_shift(q, Scalar(Q(-b, 4 * a)));
    const Rational sa = *rational_sqrt(Q(a));
    const Poly expected = P({sa * Q(-3 * b * b, 16 * a * a), Q(0), sa});
    EXPECT_EQ(sqrt_truncate(shifted, 1, 0).r, expected);
  }
}

TEST(SetoyanagiR, ParameterChecks) {
  EXPECT_THROW(setoyanagi_r({Scalar(1), Scalar(1), 3, 1}, 1, 0), std::invalid_argument);
  EXPECT_THROW(setoyanagi_r({Scalar(1), Scalar(1), 4, 4}, 1, 0), std::invalid_argument);
  EXPECT_THROW(setoyanagi_r({Scalar(2), Scalar(1), 4, 3}, 1, 0), FieldExtensionRequired);
  EXPECT_FALSE((SetoyanagiParams{Scalar(1), Scalar(1), 4, 2}.s()));
  EXPECT_EQ(*(SetoyanagiParams{Scalar(1), Scalar(1), 6, 4}.s()), 2u);
}
