#pragma once

#include "symprove/polynomial.hpp"
#include "symprove/symbol.hpp"

#include <random>
#include <string>
#include <vector>

namespace symprove::testing {

/// Symbols x, y, z (or as many names as given) with a lex order x > y > z.
struct SmallRing {
  explicit SmallRing(std::vector<std::string> names = {"x", "y", "z"},
                     OrderKind kind = OrderKind::lex);

  SymbolTablePtr symbols;
  std::vector<SymbolId> vars;
  OrderPtr order;

  QPolynomial var(std::size_t k) const { return QPolynomial::variable(vars[k], order); }
  QPolynomial constant(const Rational& c) const { return QPolynomial::constant(c, order); }
  OrderPtr reorder(OrderKind kind, std::vector<std::size_t> precedence) const;
};

/// Random polynomial with up to `terms` terms, exponents <= max_exp per
/// variable, total degree <= max_deg, small rational coefficients.
QPolynomial random_polynomial(std::mt19937_64& rng, const SmallRing& ring, std::size_t terms,
                              std::uint32_t max_exp, std::uint32_t max_deg);

Rational random_rational(std::mt19937_64& rng, int span = 9, int max_den = 4);

std::string data_path(const std::string& name);

} // namespace symprove::testing
