#include "support.hpp"

#include "symprove/error.hpp"
#include "symprove/groebner.hpp"
#include "symprove/io.hpp"

#include <gtest/gtest.h>

namespace symprove {
namespace {

using testing::SmallRing;

QPolynomial parse(const SmallRing& r, std::string_view text) {
  return parse_polynomial(text, *r.symbols, r.order);
}

GroebnerBasis<Rational> basis_of(const SmallRing& r, std::vector<std::string_view> gens,
                                 const GroebnerOptions& opt = {}) {
  IdealSpec<Rational> spec{{}, r.order};
  for (auto g : gens) {
    spec.generators.push_back(parse(r, g));
  }
  return buchberger(spec, opt);
}

TEST(NormalForm, Examples) {
  SmallRing r({"x", "y"});
  EXPECT_EQ(normal_form(parse(r, "x^2 - y"), {parse(r, "x - y")}, r.order), parse(r, "y^2 - y"));
  EXPECT_EQ(normal_form(r.constant(1), {parse(r, "x - y")}, r.order), r.constant(1));
  std::vector<QPolynomial> g{parse(r, "x^2 - y"), parse(r, "x*y - 1")};
  for (const auto& e : g) {
    EXPECT_TRUE(normal_form(e, g, r.order).is_zero());
  }
}

TEST(SPolynomial, Examples) {
  SmallRing r({"x", "y", "z"});
  auto f = parse(r, "x^2 - y");
  auto g = parse(r, "x*y - 1");
  EXPECT_EQ(s_polynomial(f, g, r.order), parse(r, "x - y^2"));
  EXPECT_TRUE(s_polynomial(f, f, r.order).is_zero());
  auto u = parse(r, "x - z");
  auto v = parse(r, "y - z^2");
  EXPECT_TRUE(normal_form(s_polynomial(u, v, r.order), {u, v}, r.order).is_zero());
  EXPECT_THROW(s_polynomial(f, QPolynomial(r.order), r.order), ArithmeticError);
}

TEST(Buchberger, Textbook) {
  SmallRing r({"x", "y"});
  auto gb = basis_of(r, {"x^2 - y", "x*y - 1"});
  ASSERT_EQ(gb.elements.size(), 2u);
  EXPECT_EQ(gb.elements[0], parse(r, "x - y^2"));
  EXPECT_EQ(gb.elements[1], parse(r, "y^3 - 1"));
  EXPECT_TRUE(gb.reduced);
  EXPECT_TRUE(ideal_member(parse(r, "y^4 - y"), gb));
  EXPECT_FALSE(ideal_member(r.constant(1), gb));
}

TEST(Buchberger, UnitIdeal) {
  SmallRing r({"x", "y"});
  for (auto kind : {OrderKind::lex, OrderKind::grevlex}) {
    IdealSpec<Rational> spec{{r.constant(1)}, r.reorder(kind, {0, 1})};
    auto gb = buchberger(spec);
    ASSERT_EQ(gb.elements.size(), 1u);
    EXPECT_TRUE(gb.elements[0].is_one());
  }
  auto gb = basis_of(r, {"x", "x - 1"});
  ASSERT_EQ(gb.elements.size(), 1u);
  EXPECT_TRUE(gb.elements[0].is_one());
}

TEST(Buchberger, RejectsEmptyIdealAndEnforcesBudget) {
  SmallRing r({"x", "y", "z"});
  EXPECT_THROW(buchberger(IdealSpec<Rational>{{QPolynomial(r.order)}, r.order}), Error);
  GroebnerOptions opt;
  opt.max_pairs = 1;
  try {
    basis_of(r, {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y + 1"}, opt);
    FAIL() << "budget not enforced";
  } catch (const BudgetExceededError& e) {
    EXPECT_GE(e.stats().pairs_processed, 1u);
  }
}

TEST(Buchberger, MembershipOfCombinations) {
  SmallRing r;
  std::mt19937_64 rng(17);
  auto gb = basis_of(r, {"x^2 - y", "y*z - x + 1"});
  for (int k = 0; k < 20; ++k) {
    auto p = testing::random_polynomial(rng, r, 3, 2, 3);
    auto q = testing::random_polynomial(rng, r, 3, 2, 3);
    EXPECT_TRUE(ideal_member(p * parse(r, "x^2 - y") + q * parse(r, "y*z - x + 1"), gb));
  }
}

TEST(Buchberger, ParametricCoefficients) {
  auto file = parse_ideal_file("vars: x, y\nparams: t\nx^2 - t*y\nx*y - 1\n");
  IdealSpec<RationalFunction> spec{{}, file.order};
  for (const auto& g : file.generators) {
    spec.generators.push_back(file.to_parametric(g));
  }
  auto gb = buchberger(spec);
  EXPECT_TRUE(s_pair_closed(gb.elements, gb.order));
  EXPECT_TRUE(contains_generators(gb, spec.generators));
  EXPECT_TRUE(is_reduced(gb.elements));
  // x = t*y^2 and y^3 = 1/t
  EXPECT_TRUE(ideal_member(file.to_parametric(file.parse("t*y^3 - 1")), gb));
}

// The property suite over random small ideals.
struct RandomIdeal {
  SmallRing ring;
  std::vector<QPolynomial> generators;
};

RandomIdeal random_ideal(std::mt19937_64& rng, OrderKind kind) {
  std::uniform_int_distribution<int> nvars(1, 3), ngens(1, 3), nterms(1, 3);
  static const std::vector<std::string> names{"x", "y", "z"};
  RandomIdeal out{SmallRing({names.begin(), names.begin() + nvars(rng)}, kind), {}};
  const int count = ngens(rng);
  while (static_cast<int>(out.generators.size()) < count) {
    auto g = testing::random_polynomial(rng, out.ring, static_cast<std::size_t>(nterms(rng)), 2, 2);
    if (!g.is_zero()) {
      out.generators.push_back(g);
    }
  }
  return out;
}

class GroebnerProperties : public ::testing::TestWithParam<OrderKind> {};

TEST_P(GroebnerProperties, RandomIdeals) {
  std::mt19937_64 rng(GetParam() == OrderKind::lex ? 101 : 202);
  for (int k = 0; k < 200; ++k) {
    auto ideal = random_ideal(rng, GetParam());
    const auto& r = ideal.ring;
    auto gb = buchberger(IdealSpec<Rational>{ideal.generators, r.order});
    ASSERT_TRUE(s_pair_closed(gb.elements, gb.order)) << k;
    ASSERT_TRUE(contains_generators(gb, ideal.generators)) << k;
    ASSERT_TRUE(is_reduced(gb.elements)) << k;

    // deterministic output
    EXPECT_EQ(buchberger(IdealSpec<Rational>{ideal.generators, r.order}).elements, gb.elements);

    for (int t = 0; t < 3; ++t) {
      auto f = testing::random_polynomial(rng, r, 4, 3, 4);
      auto nf = normal_form(f, gb.elements, gb.order);
      EXPECT_EQ(normal_form(f, gb.elements, gb.order, ReducerSelection::last), nf);
      EXPECT_EQ(normal_form(nf, gb.elements, gb.order), nf);
      EXPECT_TRUE(ideal_member(f - nf, gb));
      for (const auto& term : nf.terms()) {
        for (const auto& g : gb.elements) {
          EXPECT_FALSE(g.leading_monomial().divides(term.mono));
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, GroebnerProperties,
                         ::testing::Values(OrderKind::lex, OrderKind::grevlex),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(GroebnerVariants, AgreeOnRandomIdeals) {
  std::mt19937_64 rng(303);
  for (int k = 0; k < 60; ++k) {
    auto ideal = random_ideal(rng, OrderKind::lex);
    IdealSpec<Rational> spec{ideal.generators, ideal.ring.order};
    auto reference = buchberger(spec);
    for (bool criteria : {true, false}) {
      for (auto sel : {PairSelection::normal, PairSelection::fifo}) {
        GroebnerOptions opt;
        opt.criteria = criteria;
        opt.selection = sel;
        EXPECT_EQ(buchberger(spec, opt).elements, reference.elements) << k;
      }
    }
    // A top-reduced basis that is not inter-reduced gives the same normal forms.
    GroebnerOptions loose;
    loose.reduce_tails = false;
    loose.interreduce = false;
    auto other = buchberger(spec, loose);
    EXPECT_TRUE(s_pair_closed(other.elements, other.order));
    for (int t = 0; t < 3; ++t) {
      auto f = testing::random_polynomial(rng, ideal.ring, 4, 3, 4);
      EXPECT_EQ(normal_form(f, other.elements, other.order),
                normal_form(f, reference.elements, reference.order));
    }
  }
}

TEST(GroebnerVariants, MembershipIsOrderIndependent) {
  std::mt19937_64 rng(404);
  for (int k = 0; k < 60; ++k) {
    auto ideal = random_ideal(rng, OrderKind::lex);
    const auto& r = ideal.ring;
    std::vector<std::size_t> prec(r.vars.size());
    for (std::size_t i = 0; i < prec.size(); ++i) {
      prec[i] = prec.size() - 1 - i;
    }
    auto grev = r.reorder(OrderKind::grevlex, prec);
    std::vector<QPolynomial> moved;
    for (const auto& g : ideal.generators) {
      moved.push_back(g.with_order(grev));
    }
    auto a = buchberger(IdealSpec<Rational>{ideal.generators, r.order});
    auto b = buchberger(IdealSpec<Rational>{moved, grev});
    for (int t = 0; t < 4; ++t) {
      // Half the probes are ideal elements, half are random.
      auto f = testing::random_polynomial(rng, r, 3, 2, 3);
      if (t % 2 == 0) {
        f = f * ideal.generators[static_cast<std::size_t>(t / 2) % ideal.generators.size()];
      }
      EXPECT_EQ(ideal_member(f, a), ideal_member(f.with_order(grev), b)) << k;
    }
  }
}

} // namespace
} // namespace symprove
