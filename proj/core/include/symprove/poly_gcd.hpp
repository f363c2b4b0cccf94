#pragma once

#include "symprove/polynomial.hpp"

#include <optional>

namespace symprove {

/// a / b when b divides a exactly in Q[symbols], otherwise nullopt.
/// Throws ArithmeticError if b is zero.
std::optional<QPolynomial> divide_exact(const QPolynomial& a, const QPolynomial& b);

/// Largest monomial dividing every term (1 for the zero polynomial).
Monomial monomial_content(const QPolynomial& f);

/// Positive rational c such that f / c has coprime integer coefficients.
Rational scalar_content(const QPolynomial& f);

/// f scaled to coprime integer coefficients with a positive leading
/// coefficient. Zero stays zero.
QPolynomial integer_primitive(const QPolynomial& f);

/// Greatest common divisor in Q[symbols], normalized by integer_primitive
/// (so gcd(0, 0) = 0 and coprime inputs give 1).
///
/// Strategy: strip monomial and scalar content, then recurse on variables.
/// Images modulo a word-size prime bound the gcd degree in every variable;
/// a zero bound for variable x reduces the problem to coefficient gcds in x,
/// which is the common case and avoids any remainder sequence. Otherwise a
/// primitive pseudo-remainder sequence runs in the variable of least degree.
QPolynomial gcd(const QPolynomial& a, const QPolynomial& b);

struct GcdCounters {
  std::size_t calls = 0;
  std::size_t modular_trivial = 0;
  std::size_t prs_runs = 0;
};

/// Per-thread counters, for benchmarks and tuning.
GcdCounters& gcd_counters();

} // namespace symprove
