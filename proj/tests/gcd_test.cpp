#include "support.hpp"

#include "symprove/error.hpp"
#include "symprove/poly_gcd.hpp"

#include <gtest/gtest.h>

namespace symprove {
namespace {

using testing::SmallRing;

TEST(DivideExact, QuotientOrNothing) {
  SmallRing r;
  auto x = r.var(0), y = r.var(1);
  auto f = (x + y) * (x - r.constant(2) * y);
  EXPECT_EQ(*divide_exact(f, x + y), x - r.constant(2) * y);
  EXPECT_FALSE(divide_exact(f, x + r.constant(1)).has_value());
  EXPECT_THROW(divide_exact(f, QPolynomial(r.order)), ArithmeticError);
}

TEST(Content, MonomialAndScalar) {
  SmallRing r;
  auto x = r.var(0), y = r.var(1);
  auto f = r.constant(Rational(4, 3)) * x * x * y + r.constant(Rational(2, 9)) * x * y * y;
  EXPECT_EQ(monomial_content(f), Monomial({{r.vars[0], 1}, {r.vars[1], 1}}));
  EXPECT_EQ(scalar_content(f), Rational(2, 9));
  auto p = integer_primitive(-f);
  EXPECT_EQ(p.leading_coeff(), 6);
}

TEST(Gcd, KnownCases) {
  SmallRing r;
  auto x = r.var(0), y = r.var(1), z = r.var(2);
  EXPECT_TRUE(gcd(QPolynomial(r.order), QPolynomial(r.order)).is_zero());
  EXPECT_TRUE(gcd(x + r.constant(1), y).is_one());
  EXPECT_EQ(gcd(x * y, x * z), x);
  EXPECT_EQ(gcd(r.constant(6) * (x + y), r.constant(4) * (x + y) * z), x + y);
}

// gcd(a*g, b*g) is a multiple of g and divides both inputs.
TEST(Gcd, RandomCommonFactor) {
  SmallRing r({"x", "y", "z", "w"});
  std::mt19937_64 rng(21);
  int nontrivial = 0;
  for (int k = 0; k < 120; ++k) {
    auto g = testing::random_polynomial(rng, r, 3, 2, 3);
    auto a = testing::random_polynomial(rng, r, 3, 2, 3);
    auto b = testing::random_polynomial(rng, r, 3, 2, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) {
      continue;
    }
    auto A = a * g;
    auto B = b * g;
    auto d = gcd(A, B);
    ASSERT_TRUE(divide_exact(A, d).has_value());
    ASSERT_TRUE(divide_exact(B, d).has_value());
    ASSERT_TRUE(divide_exact(d, integer_primitive(g)).has_value());
    // the cofactors are coprime
    auto ca = *divide_exact(A, d);
    auto cb = *divide_exact(B, d);
    EXPECT_TRUE(gcd(ca, cb).is_constant());
    nontrivial += !g.is_constant();
  }
  EXPECT_GT(nontrivial, 50);
}

} // namespace
} // namespace symprove
