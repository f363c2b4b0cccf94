#include "support.hpp"

#include "symprove/error.hpp"
#include "symprove/rational.hpp"

#include <gtest/gtest.h>

namespace symprove {
namespace {

using testing::SmallRing;

TEST(Rational, StaysCanonical) {
  Rational r = Rational(6) / Rational(-4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    Rational a = testing::random_rational(rng, 50, 30);
    Rational b = testing::random_rational(rng, 50, 30);
    for (Rational c : {Rational(a + b), Rational(a * b), Rational(a - b)}) {
      EXPECT_GT(c.get_den(), 0);
      EXPECT_EQ(gcd(Integer(abs(c.get_num())), c.get_den()), 1);
    }
  }
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("17"), 17);
  EXPECT_EQ(to_string(parse_rational("-4/6")), "-2/3");
  EXPECT_EQ(to_string(Rational(6)), "6");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("1/-2"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(SymbolTable, NamesAndIdsAreUnique) {
  SymbolTable t;
  SymbolId a = t.add("a11", SymbolKind::rk_coefficient);
  SymbolId h = t.add("h", SymbolKind::parameter);
  EXPECT_NE(a, h);
  EXPECT_EQ(t.id_of("h"), h);
  EXPECT_EQ(t.intern("a11", SymbolKind::rk_coefficient), a);
  EXPECT_THROW(t.add("h", SymbolKind::parameter), Error);
  EXPECT_THROW(t.id_of("nope"), UnknownSymbolError);
  EXPECT_EQ(t.of_kind(SymbolKind::parameter), std::vector<SymbolId>{h});
}

TEST(Monomial, DropsZeroExponentsAndMerges) {
  Monomial m({{3, 0}, {1, 2}, {1, 1}});
  ASSERT_EQ(m.entries().size(), 1u);
  EXPECT_EQ(m.exponent(1), 3u);
  EXPECT_EQ(m.degree(), 3u);
  EXPECT_TRUE(Monomial({{2, 0}}).is_one());
  Monomial a({{0, 2}, {1, 1}});
  Monomial b({{1, 3}, {2, 1}});
  EXPECT_EQ(Monomial::lcm(a, b), Monomial({{0, 2}, {1, 3}, {2, 1}}));
  EXPECT_EQ(Monomial::gcd(a, b), Monomial({{1, 1}}));
  EXPECT_TRUE(Monomial::gcd(a, b).divides(a));
  EXPECT_EQ((a * b).quotient(b), a);
  EXPECT_THROW(a.quotient(b), ArithmeticError);
}

Monomial random_monomial(std::mt19937_64& rng, const SmallRing& r) {
  std::uniform_int_distribution<std::uint32_t> e(0, 3);
  std::vector<Monomial::Entry> out;
  for (auto v : r.vars) {
    out.emplace_back(v, e(rng));
  }
  return Monomial(std::move(out));
}

class OrderProperties : public ::testing::TestWithParam<OrderKind> {};

TEST_P(OrderProperties, TotalMultiplicativeWellFounded) {
  SmallRing r({"x", "y", "z", "w"}, GetParam());
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    Monomial a = random_monomial(rng, r);
    Monomial b = random_monomial(rng, r);
    Monomial c = random_monomial(rng, r);
    auto ab = r.order->compare(a, b);
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_EQ(r.order->compare(b, a), 0 <=> ab);
    EXPECT_EQ(r.order->compare(a * c, b * c), ab);
    EXPECT_TRUE((r.order->compare(a, Monomial{})) >= 0);
    if (ab < 0 && r.order->compare(b, c) < 0) {
      EXPECT_TRUE((r.order->compare(a, c)) < 0);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Kinds, OrderProperties,
                         ::testing::Values(OrderKind::lex, OrderKind::grevlex));

TEST(MonomialOrder, LexAndGrevlexExamples) {
  SmallRing lex({"x", "y", "z"}, OrderKind::lex);
  SmallRing grl({"x", "y", "z"}, OrderKind::grevlex);
  auto x = lex.vars[0], y = lex.vars[1], z = lex.vars[2];
  Monomial x1({{x, 1}}), y3({{y, 3}}), xz({{x, 1}, {z, 1}}), y2({{y, 2}});
  EXPECT_TRUE((lex.order->compare(x1, y3)) > 0);
  EXPECT_TRUE((grl.order->compare(x1, y3)) < 0);
  // equal degree: grevlex prefers the smaller power of the last variable
  EXPECT_TRUE((grl.order->compare(xz, y2)) < 0);
  EXPECT_TRUE((lex.order->compare(xz, y2)) > 0);
}

TEST(MonomialOrder, RejectsDuplicatesAndUnknownSymbols) {
  auto t = std::make_shared<SymbolTable>();
  SymbolId x = t->add("x", SymbolKind::derivative);
  SymbolId y = t->add("y", SymbolKind::derivative);
  EXPECT_THROW(make_order(OrderKind::lex, {x, x}, t), Error);
  auto o = make_order(OrderKind::lex, {x}, t);
  EXPECT_THROW(o->compare(Monomial({{y, 1}}), Monomial({{x, 1}})), UnknownSymbolError);
  EXPECT_THROW(QPolynomial::variable(y, o), UnknownSymbolError);
}

TEST(Polynomial, TermsStrictlyDescendingWithoutZeros) {
  SmallRing r;
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    QPolynomial f = testing::random_polynomial(rng, r, 6, 2, 4) *
                    testing::random_polynomial(rng, r, 4, 2, 3);
    auto t = f.terms();
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_FALSE(is_zero(t[i].coeff));
      if (i + 1 < t.size()) {
        EXPECT_TRUE((r.order->compare(t[i].mono, t[i + 1].mono)) > 0);
      }
    }
  }
}

TEST(Polynomial, RingAxioms) {
  SmallRing r;
  std::mt19937_64 rng(5);
  for (int k = 0; k < 150; ++k) {
    auto f = testing::random_polynomial(rng, r, 5, 2, 4);
    auto g = testing::random_polynomial(rng, r, 5, 2, 4);
    auto h = testing::random_polynomial(rng, r, 3, 2, 3);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(-(-f), f);
  }
}

TEST(Polynomial, EvaluationIsAHomomorphism) {
  SmallRing r;
  std::mt19937_64 rng(9);
  for (int k = 0; k < 100; ++k) {
    auto f = testing::random_polynomial(rng, r, 5, 3, 5);
    auto g = testing::random_polynomial(rng, r, 5, 3, 5);
    Assignment at;
    for (auto v : r.vars) {
      at[v] = testing::random_rational(rng);
    }
    EXPECT_EQ(evaluate(f * g, at), evaluate(f, at) * evaluate(g, at));
    EXPECT_EQ(evaluate(f + g, at), evaluate(f, at) + evaluate(g, at));
  }
}

TEST(Polynomial, ZeroLeadingTermThrows) {
  SmallRing r;
  QPolynomial zero(r.order);
  EXPECT_THROW(zero.leading_term(), ArithmeticError);
  EXPECT_TRUE(zero.monic().is_zero());
}

TEST(Polynomial, MixingOrdersThrows) {
  SmallRing r;
  auto other = r.reorder(OrderKind::lex, {1, 0, 2});
  auto f = r.var(0);
  auto g = QPolynomial::variable(r.vars[1], other);
  EXPECT_THROW(f + g, ArithmeticError);
  EXPECT_EQ(f.with_order(other).leading_monomial(), f.leading_monomial());
}

TEST(Polynomial, MonicAndMinusMultiple) {
  SmallRing r;
  auto x = r.var(0), y = r.var(1);
  auto f = r.constant(3) * x * y - r.constant(6) * y;
  auto m = f.monic();
  EXPECT_EQ(m, x * y - r.constant(2) * y);
  auto g = f.minus_multiple(Rational(3), Monomial({{r.vars[0], 1}}), y);
  EXPECT_EQ(g, r.constant(-6) * y);
}

} // namespace
} // namespace symprove
