#pragma once

#include "symprove/poly_gcd.hpp"
#include "symprove/polynomial.hpp"

namespace symprove {

/// Quotient of two polynomials over Q in parameter symbols.
///
/// Kept fully reduced: numerator and denominator are coprime (multivariate
/// gcd), the denominator has coprime integer coefficients and a positive
/// leading coefficient, and zero is 0/1. Equality still falls back to
/// cross-multiplication when the stored forms differ.
class RationalFunction {
public:
  RationalFunction() : den_(QPolynomial::constant(1)) {}
  RationalFunction(int value) : RationalFunction(Rational(value)) {}  // NOLINT
  RationalFunction(const Rational& value)                               // NOLINT
      : num_(QPolynomial::constant(value)), den_(QPolynomial::constant(1)) {}
  explicit RationalFunction(QPolynomial numerator);

  /// Throws ArithmeticError if the denominator is zero.
  RationalFunction(QPolynomial numerator, QPolynomial denominator);

  const QPolynomial& numerator() const noexcept { return num_; }
  const QPolynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws ArithmeticError when dividing by zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

  /// a/b = c/d iff a*d - c*b = 0.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// Throws ArithmeticError if the denominator vanishes at the point.
  Rational evaluate(const Assignment& values, const SymbolTable* names = nullptr) const;

private:
  struct Reduced {};
  RationalFunction(QPolynomial numerator, QPolynomial denominator, Reduced);
  void normalize_denominator();

  QPolynomial num_;
  QPolynomial den_;
};

inline bool is_zero(const RationalFunction& r) { return r.is_zero(); }
inline bool is_one(const RationalFunction& r) { return r.is_one(); }

/// Polynomial with rational-function coefficients.
using RPolynomial = Polynomial<RationalFunction>;

extern template class Polynomial<RationalFunction>;

} // namespace symprove
