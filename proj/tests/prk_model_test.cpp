#include "support.hpp"

#include "symprove/error.hpp"
#include "symprove/io.hpp"
#include "symprove/prk_model.hpp"

#include <gtest/gtest.h>

#include <set>

namespace symprove {
namespace {

std::vector<std::string> names(const OrderPtr& order, const SymbolTable& t) {
  std::vector<std::string> out;
  for (auto id : order->precedence()) {
    out.push_back(t.name(id));
  }
  return out;
}

PRKSpec det(std::size_t s, bool identify = true) {
  return {SystemKind::deterministic, s, identify};
}
PRKSpec stoch(std::size_t s, bool identify = true) {
  return {SystemKind::stochastic, s, identify};
}

TEST(PRKModel, NamesAndValidation) {
  PRKModel m(stoch(2));
  const auto& t = *m.symbols();
  EXPECT_EQ(t.name(m.a(1, 2)), "a12");
  EXPECT_EQ(t.name(m.ah(2, 1)), "ah21");
  EXPECT_EQ(t.name(m.alh(2, 2)), "alh22");
  EXPECT_EQ(t.name(m.beh(1)), "beh1");
  EXPECT_EQ(t.name(m.derivative(Entity::Qt, 1, Wrt::q)), "dQt_n1_dq");
  EXPECT_EQ(t.name(m.derivative(Entity::p_n, 0, Wrt::p)), "dp_n_dp");
  EXPECT_EQ(m.Hpq(1), m.Hqp(1));
  EXPECT_EQ(m.Htpq(2), m.Htqp(2));
  EXPECT_THROW(PRKModel(det(0)), Error);
  EXPECT_THROW(PRKModel(det(1)).dB(), Error);

  PRKModel split(det(2, false));
  EXPECT_NE(split.Hpq(1), split.Hqp(1));
  EXPECT_EQ(split.symbols()->name(split.Hqp(2)), "Hqp2");

  PRKModel big(det(10));
  EXPECT_EQ(big.symbols()->name(big.a(1, 10)), "a1_10");
  EXPECT_EQ(big.symbols()->name(big.b(10)), "b10");
}

TEST(VariationalIdeal, SquareAndLinear) {
  for (auto spec : {det(1), det(2), det(3), stoch(1), stoch(2)}) {
    PRKModel m(spec);
    auto ideal = build_variational_ideal(m, default_variable_order(m, 1));
    const std::size_t s = spec.stages;
    const std::size_t expected = spec.kind == SystemKind::deterministic ? 4 + 8 * s : 4 + 12 * s;
    EXPECT_EQ(ideal.generators.size(), expected);
    EXPECT_EQ(m.derivative_symbols().size(), expected);
    std::set<SymbolId> seen;
    for (const auto& g : ideal.generators) {
      EXPECT_LE(g.total_degree(), 1u);
      for (auto id : g.symbols()) {
        seen.insert(id);
      }
    }
    EXPECT_EQ(seen.size(), expected);
  }
}

TEST(VariationalIdeal, FirstUpdateEquation) {
  PRKModel m(det(1));
  auto order = default_variable_order(m, 1);
  auto ideal = build_variational_ideal(m, order);
  auto pv = [&](SymbolId id) { return RationalFunction(QPolynomial::variable(id, m.parameter_order())); };
  auto dv = [&](SymbolId id) { return RPolynomial::variable(id, order); };
  auto expected = dv(m.derivative(Entity::p_n, 0, Wrt::p)) -
                  RPolynomial::constant(RationalFunction(1), order) -
                  dv(m.derivative(Entity::p_stage, 1, Wrt::p)).scaled(pv(m.h()) * pv(m.b(1)));
  bool found = false;
  for (const auto& g : ideal.generators) {
    found = found || g == expected || g == -expected;
  }
  EXPECT_TRUE(found);
}

TEST(VariationalIdeal, NoiseStageEquation) {
  PRKModel m(stoch(2));
  auto order = default_variable_order(m, 1);
  auto ideal = build_variational_ideal(m, order);
  auto pv = [&](SymbolId id) { return RationalFunction(QPolynomial::variable(id, m.parameter_order())); };
  auto dv = [&](SymbolId id) { return RPolynomial::variable(id, order); };
  for (std::size_t i = 1; i <= 2; ++i) {
    auto expected = dv(m.derivative(Entity::Pt, i, Wrt::p)) -
                    dv(m.derivative(Entity::p_stage, i, Wrt::p)).scaled(pv(m.Htqp(i))) -
                    dv(m.derivative(Entity::q_stage, i, Wrt::p)).scaled(pv(m.Htqq(i)));
    bool found = false;
    for (const auto& g : ideal.generators) {
      found = found || g == expected || g == -expected;
    }
    EXPECT_TRUE(found) << i;
  }
}

TEST(VariationalIdeal, UnidentifiedMixedPartials) {
  PRKModel m(det(2, false));
  auto ideal = build_variational_ideal(m, default_variable_order(m, 1));
  std::set<std::string> hparams;
  for (const auto& g : ideal.generators) {
    for (const auto& t : g.terms()) {
      for (const auto* poly : {&t.coeff.numerator(), &t.coeff.denominator()}) {
        for (auto id : poly->symbols()) {
          const auto& n = m.symbols()->name(id);
          if (n.starts_with("H")) {
            hparams.insert(n);
          }
        }
      }
    }
  }
  EXPECT_EQ(hparams, (std::set<std::string>{"Hpp1", "Hpq1", "Hqp1", "Hqq1", "Hpp2", "Hpq2",
                                            "Hqp2", "Hqq2"}));
}

TEST(Target, DeterminantArithmetic) {
  PRKModel m(det(1));
  auto order = default_variable_order(m, 1);
  auto target = build_target(m, order);
  EXPECT_EQ(target.total_degree(), 2u);
  auto pp = m.derivative(Entity::p_n, 0, Wrt::p), pq = m.derivative(Entity::p_n, 0, Wrt::q);
  auto qp = m.derivative(Entity::q_n, 0, Wrt::p), qq = m.derivative(Entity::q_n, 0, Wrt::q);
  auto at = [&](Rational a, Rational b, Rational c, Rational d) {
    Assignment x{{pp, a}, {pq, b}, {qp, c}, {qq, d}};
    Rational sum = 0;
    for (const auto& t : target.terms()) {
      Rational v = t.coeff.numerator().constant_term() / t.coeff.denominator().constant_term();
      for (const auto& [id, e] : t.mono.entries()) {
        for (std::uint32_t k = 0; k < e; ++k) {
          v *= x.at(id);
        }
      }
      sum += v;
    }
    return sum;
  };
  EXPECT_EQ(at(1, 0, 0, 1), 0);
  EXPECT_EQ(at(2, 0, 0, Rational(1, 2)), 0);
  EXPECT_EQ(at(1, 0, 5, 1), 0);
  EXPECT_EQ(at(2, 0, 0, 1), -1);
}

TEST(SymplecticIdeal, Generators) {
  PRKModel m1(det(1));
  auto order = default_variable_order(m1, 2);
  auto ideal = build_symplectic_ideal(m1, order);
  ASSERT_EQ(ideal.generators.size(), 2u);
  auto parse = [&](std::string_view s) { return parse_polynomial(s, *m1.symbols(), order); };
  std::set<std::string> got;
  for (const auto& g : ideal.generators) {
    got.insert(render_polynomial(g.leading_coeff() < 0 ? -g : g));
  }
  std::set<std::string> expected;
  for (auto text : {"b1 - bh1", "b1*ah11 + bh1*a11 - b1*bh1"}) {
    auto g = parse(text);
    expected.insert(render_polynomial(g.leading_coeff() < 0 ? -g : g));
  }
  EXPECT_EQ(got, expected);

  PRKModel m2(det(2));
  EXPECT_EQ(build_symplectic_ideal(m2, default_variable_order(m2, 2)).generators.size(), 6u);
  PRKModel m3(stoch(2));
  EXPECT_EQ(build_symplectic_ideal(m3, default_variable_order(m3, 2)).generators.size(), 20u);
}

TEST(Orders, ReferenceSequences) {
  PRKModel d(det(2));
  EXPECT_EQ(names(default_variable_order(d, 1), *d.symbols()),
            (std::vector<std::string>{"dp_n_dp", "dp_n_dq", "dq_n_dp", "dq_n_dq", "dP_n2_dp",
                                      "dP_n1_dp", "dP_n2_dq", "dP_n1_dq", "dQ_n2_dp", "dQ_n1_dp",
                                      "dQ_n2_dq", "dQ_n1_dq", "dp_n2_dp", "dp_n1_dp", "dp_n2_dq",
                                      "dp_n1_dq", "dq_n2_dp", "dq_n1_dp", "dq_n2_dq",
                                      "dq_n1_dq"}));
  EXPECT_EQ(names(default_variable_order(d, 2), *d.symbols()),
            (std::vector<std::string>{"bh2", "bh1", "b2", "b1", "ah22", "ah21", "ah12", "ah11",
                                      "a22", "a21", "a12", "a11"}));

  PRKModel s(stoch(2));
  EXPECT_EQ(names(default_variable_order(s, 1), *s.symbols()),
            (std::vector<std::string>{
                "dp_n2_dp",  "dp_n1_dp",  "dp_n2_dq",  "dp_n1_dq",  "dq_n2_dp",  "dq_n1_dp",
                "dq_n2_dq",  "dq_n1_dq",  "dP_n1_dp",  "dP_n2_dp",  "dP_n1_dq",  "dP_n2_dq",
                "dQ_n1_dp",  "dQ_n2_dp",  "dQ_n1_dq",  "dQ_n2_dq",  "dPt_n1_dp", "dPt_n2_dp",
                "dPt_n1_dq", "dPt_n2_dq", "dQt_n1_dp", "dQt_n2_dp", "dQt_n1_dq", "dQt_n2_dq",
                "dp_n_dp",   "dp_n_dq",   "dq_n_dp",   "dq_n_dq"}));
  EXPECT_EQ(names(default_variable_order(s, 2), *s.symbols()),
            (std::vector<std::string>{"be2",  "b2",   "be1",  "b1",   "beh2",  "bh2",
                                      "beh1", "bh1",  "al22", "a22",  "al21",  "a21",
                                      "al12", "a12",  "al11", "a11",  "alh22", "ah22",
                                      "alh21", "ah21", "alh12", "ah12", "alh11", "ah11"}));
  EXPECT_THROW(default_variable_order(d, 3), Error);
}

TEST(Orders, StylesCoverEveryDerivative) {
  for (auto spec : {det(2), stoch(2)}) {
    PRKModel m(spec);
    for (auto style : {Stage1Style::deterministic_paper, Stage1Style::stochastic_paper,
                       Stage1Style::reversed, Stage1Style::grevlex}) {
      auto o = stage1_order(m, style);
      std::set<SymbolId> got(o->precedence().begin(), o->precedence().end());
      std::set<SymbolId> want(m.derivative_symbols().begin(), m.derivative_symbols().end());
      EXPECT_EQ(got, want) << to_string(style);
    }
  }
}

Rational evaluate_generator(const QPolynomial& g, const Assignment& at) {
  Rational sum = 0;
  for (const auto& t : g.terms()) {
    Rational v = t.coeff;
    for (const auto& [id, e] : t.mono.entries()) {
      for (std::uint32_t k = 0; k < e; ++k) {
        v *= at.at(id);
      }
    }
    sum += v;
  }
  return sum;
}

TEST(RandomCoefficients, LieOnTheVariety) {
  for (auto spec : {det(1), det(2), det(3), stoch(1), stoch(2)}) {
    PRKModel m(spec);
    auto ideal = build_symplectic_ideal(m, default_variable_order(m, 2));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto c = random_symplectic_coefficients(spec, seed);
      auto at = coefficient_assignment(m, c);
      for (const auto& g : ideal.generators) {
        ASSERT_EQ(evaluate_generator(g, at), 0) << render_polynomial(g) << " seed " << seed;
      }
    }
  }
}

TEST(RandomCoefficients, MidpointAndLobatto) {
  PRKModel m1(det(1));
  auto pairs = parse_coefficient_file("a11 = 1/2\nah11 = 1/2\nb1 = 1\nbh1 = 1\n");
  auto c = coefficients_from_pairs(m1, pairs);
  for (const auto& g : build_symplectic_ideal(m1, default_variable_order(m1, 2)).generators) {
    EXPECT_EQ(evaluate_generator(g, coefficient_assignment(m1, c)), 0);
  }

  PRKModel m2(det(2));
  auto lob = coefficients_from_pairs(
      m2, parse_coefficient_file(read_file(testing::data_path("lobatto3ab.coeffs"))));
  EXPECT_EQ(lob.a[1][0], Rational(1, 2));
  for (const auto& g : build_symplectic_ideal(m2, default_variable_order(m2, 2)).generators) {
    EXPECT_EQ(evaluate_generator(g, coefficient_assignment(m2, lob)), 0);
  }
  EXPECT_THROW(coefficients_from_pairs(m2, {{"a11", 1}}), Error);
  auto extra = pairs;
  extra.emplace_back("zz", 1);
  EXPECT_THROW(coefficients_from_pairs(m1, extra), Error);
}

TEST(RandomCoefficients, Deterministic) {
  auto x = random_symplectic_coefficients(stoch(2), 7);
  auto y = random_symplectic_coefficients(stoch(2), 7);
  EXPECT_EQ(x.a, y.a);
  EXPECT_EQ(x.alh, y.alh);
  for (const auto& b : x.b) {
    EXPECT_NE(b, 0);
  }
}

} // namespace
} // namespace symprove
