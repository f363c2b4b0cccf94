#include "symprove/rational_function.hpp"

namespace symprove {

namespace {

QPolynomial quotient(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_one()) {
    return a;
  }
  auto q = divide_exact(a, b);
  if (!q) {
    throw ArithmeticError("internal error: gcd does not divide its argument");
  }
  return std::move(*q);
}

} // namespace

RationalFunction::RationalFunction(QPolynomial numerator)
    : num_(std::move(numerator)), den_(QPolynomial::constant(1, num_.order())) {}

RationalFunction::RationalFunction(QPolynomial numerator, QPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) {
    throw ArithmeticError("rational function with zero denominator");
  }
  if (num_.is_zero()) {
    den_ = QPolynomial::constant(1, den_.order());
    return;
  }
  if (!den_.is_constant()) {
    QPolynomial g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = quotient(num_, g);
      den_ = quotient(den_, g);
    }
  }
  normalize_denominator();
}

RationalFunction::RationalFunction(QPolynomial numerator, QPolynomial denominator, Reduced)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.is_zero()) {
    den_ = QPolynomial::constant(1, den_.order());
    return;
  }
  normalize_denominator();
}

void RationalFunction::normalize_denominator() {
  Rational c = scalar_content(den_);
  if (sgn(den_.leading_coeff()) < 0) {
    c = -c;
  }
  if (c != 1) {
    Rational inv = 1 / c;
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, Reduced{});
}

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
  using R = RationalFunction;
  if (x.is_zero()) {
    return y;
  }
  if (y.is_zero()) {
    return x;
  }
  const QPolynomial& a = x.num_;
  const QPolynomial& b = x.den_;
  const QPolynomial& c = y.num_;
  const QPolynomial& d = y.den_;
  if (b.is_one() && d.is_one()) {
    return R(a + c, b, R::Reduced{});
  }
  if (b == d) {
    return R(a + c, b);
  }
  if (b.is_one()) {
    return R(a * d + c, d, R::Reduced{});
  }
  if (d.is_one()) {
    return R(a + c * b, b, R::Reduced{});
  }
  QPolynomial g = gcd(b, d);
  if (g.is_one()) {
    return R(a * d + c * b, b * d, R::Reduced{});
  }
  QPolynomial b1 = quotient(b, g);
  QPolynomial d1 = quotient(d, g);
  QPolynomial n = a * d1 + c * b1;
  if (n.is_zero()) {
    return R();
  }
  QPolynomial t = gcd(n, g);
  return R(quotient(n, t), b1 * quotient(d, t), R::Reduced{});
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
  using R = RationalFunction;
  if (x.is_zero() || y.is_zero()) {
    return R();
  }
  const QPolynomial& a = x.num_;
  const QPolynomial& b = x.den_;
  const QPolynomial& c = y.num_;
  const QPolynomial& d = y.den_;
  if (b.is_constant() && d.is_constant()) {
    return R(a * c, b * d, R::Reduced{});
  }
  QPolynomial g1 = d.is_constant() ? QPolynomial::constant(1) : gcd(a, d);
  QPolynomial g2 = b.is_constant() ? QPolynomial::constant(1) : gcd(c, b);
  return R(quotient(a, g1) * quotient(c, g2), quotient(b, g2) * quotient(d, g1), R::Reduced{});
}

RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
  if (y.is_zero()) {
    throw ArithmeticError("division by the zero rational function");
  }
  RationalFunction inv(y.den_, y.num_, RationalFunction::Reduced{});
  return x * inv;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.num_ == b.num_ && a.den_ == b.den_) {
    return true;
  }
  return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

Rational RationalFunction::evaluate(const Assignment& values, const SymbolTable* names) const {
  Rational d = symprove::evaluate(den_, values, names);
  if (symprove::is_zero(d)) {
    throw ArithmeticError("denominator vanishes at the evaluation point");
  }
  return symprove::evaluate(num_, values, names) / d;
}

template class Polynomial<RationalFunction>;

} // namespace symprove
