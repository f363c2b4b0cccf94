#pragma once

#include "symprove/error.hpp"
#include "symprove/monomial.hpp"
#include "symprove/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace symprove {

namespace detail {
// Unqualified calls so that coefficient types declared later are found by ADL.
template <class K>
bool coeff_is_zero(const K& c) {
  return is_zero(c);
}
template <class K>
bool coeff_is_one(const K& c) {
  return is_one(c);
}
} // namespace detail

template <class K>
struct Term {
  K coeff;
  Monomial mono;

  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coeff == b.coeff;
  }
};

/// Sparse multivariate polynomial over the field K (Rational or
/// RationalFunction). Terms are kept strictly descending under the
/// associated order with no zero coefficients, so equal polynomials have
/// identical term lists.
///
/// A polynomial without an order must be constant; binary operations adopt
/// the order of the ordered operand.
template <class K>
class Polynomial {
public:
  using Coeff = K;

  Polynomial() = default;
  explicit Polynomial(OrderPtr order) : order_(std::move(order)) {}

  /// Sorts, merges duplicate monomials and drops zero coefficients.
  Polynomial(OrderPtr order, std::vector<Term<K>> terms);

  static Polynomial constant(const K& c, OrderPtr order = nullptr) {
    Polynomial p(std::move(order));
    if (!detail::coeff_is_zero(c)) {
      p.terms_.push_back(Term<K>{c, Monomial{}});
    }
    return p;
  }

  static Polynomial term(const K& c, Monomial m, OrderPtr order) {
    if (!m.is_one() && !order) {
      throw ArithmeticError("non-constant polynomial requires a monomial order");
    }
    if (order) {
      order->check(m);
    }
    Polynomial p(std::move(order));
    if (!detail::coeff_is_zero(c)) {
      p.terms_.push_back(Term<K>{c, std::move(m)});
    }
    return p;
  }

  static Polynomial variable(SymbolId id, OrderPtr order) {
    return term(K(1), Monomial::variable(id), std::move(order));
  }

  /// Trusts that `terms` are strictly descending with nonzero coefficients.
  static Polynomial from_sorted(OrderPtr order, std::vector<Term<K>> terms) {
    Polynomial p(std::move(order));
    p.terms_ = std::move(terms);
    return p;
  }

  const OrderPtr& order() const noexcept { return order_; }
  std::span<const Term<K>> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
  }
  bool is_one() const { return is_constant() && !terms_.empty() && detail::coeff_is_one(terms_[0].coeff); }

  const Term<K>& leading_term() const {
    if (terms_.empty()) {
      throw ArithmeticError("zero polynomial has no leading term");
    }
    return terms_.front();
  }
  const K& leading_coeff() const { return leading_term().coeff; }
  const Monomial& leading_monomial() const { return leading_term().mono; }

  K constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) {
      return terms_.back().coeff;
    }
    return K(0);
  }

  /// Coefficient of exactly monomial `m` (zero if absent).
  K coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
      if (t.mono == m) {
        return t.coeff;
      }
    }
    return K(0);
  }

  std::uint32_t total_degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) {
      d = std::max(d, t.mono.degree());
    }
    return d;
  }

  std::uint32_t degree_in(SymbolId id) const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) {
      d = std::max(d, t.mono.exponent(id));
    }
    return d;
  }

  std::set<SymbolId> symbols() const {
    std::set<SymbolId> out;
    for (const auto& t : terms_) {
      for (const auto& [id, exp] : t.mono.entries()) {
        (void)exp;
        out.insert(id);
      }
    }
    return out;
  }

  /// Same polynomial re-sorted under another order.
  Polynomial with_order(OrderPtr order) const {
    return Polynomial(std::move(order), terms_);
  }

  Polynomial operator-() const {
    Polynomial out(order_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      out.terms_.push_back(Term<K>{K(-t.coeff), t.mono});
    }
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, true);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return multiply(a, b);
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  /// c * m * this.
  Polynomial scaled(const K& c, const Monomial& m = Monomial{}) const {
    Polynomial out(order_);
    if (detail::coeff_is_zero(c)) {
      return out;
    }
    if (!m.is_one()) {
      require_order(m);
    }
    out.terms_.reserve(terms_.size());
    const bool unit = detail::coeff_is_one(c);
    for (const auto& t : terms_) {
      K prod = unit ? t.coeff : K(t.coeff * c);
      if (!detail::coeff_is_zero(prod)) {
        out.terms_.push_back(Term<K>{std::move(prod), m.is_one() ? t.mono : t.mono * m});
      }
    }
    return out;
  }

  /// this - c * m * g, merged in one pass (monomial multiplication preserves
  /// the order, so c*m*g is already sorted).
  Polynomial minus_multiple(const K& c, const Monomial& m, const Polynomial& g) const;

  Polynomial monic() const {
    if (terms_.empty()) {
      return *this;
    }
    const K& lc = terms_.front().coeff;
    if (detail::coeff_is_one(lc)) {
      return *this;
    }
    K inv = K(1) / lc;
    Polynomial out(order_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      out.terms_.push_back(Term<K>{K(t.coeff * inv), t.mono});
    }
    out.terms_.front().coeff = K(1);
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

private:
  static OrderPtr pick_order(const Polynomial& a, const Polynomial& b) {
    if (!same_order(a.order_, b.order_)) {
      throw ArithmeticError("polynomials use different monomial orders");
    }
    return a.order_ ? a.order_ : b.order_;
  }

  void require_order(const Monomial& m) const {
    if (!order_) {
      throw ArithmeticError("non-constant polynomial requires a monomial order");
    }
    order_->check(m);
  }

  static int cmp(const MonomialOrder* order, const Monomial& a, const Monomial& b) {
    if (!order) {
      // Only constants are unordered.
      return 0;
    }
    auto c = order->compare(a, b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract);
  static Polynomial multiply(const Polynomial& a, const Polynomial& b);

  OrderPtr order_;
  std::vector<Term<K>> terms_;
};

template <class K>
Polynomial<K>::Polynomial(OrderPtr order, std::vector<Term<K>> terms) : order_(std::move(order)) {
  if (!order_) {
    for (const auto& t : terms) {
      if (!t.mono.is_one()) {
        throw ArithmeticError("non-constant polynomial requires a monomial order");
      }
    }
  } else {
    for (const auto& t : terms) {
      order_->check(t.mono);
    }
  }
  const MonomialOrder* ord = order_.get();
  std::sort(terms.begin(), terms.end(), [ord](const Term<K>& x, const Term<K>& y) {
    return cmp(ord, x.mono, y.mono) > 0;
  });
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff += t.coeff;
    } else {
      if (!terms_.empty() && detail::coeff_is_zero(terms_.back().coeff)) {
        terms_.pop_back();
      }
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && detail::coeff_is_zero(terms_.back().coeff)) {
    terms_.pop_back();
  }
}

template <class K>
Polynomial<K> Polynomial<K>::combine(const Polynomial& a, const Polynomial& b, bool subtract) {
  OrderPtr order = pick_order(a, b);
  const MonomialOrder* ord = order.get();
  Polynomial out(order);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c = 0;
    if (i == a.terms_.size()) {
      c = -1;
    } else if (j == b.terms_.size()) {
      c = 1;
    } else {
      c = cmp(ord, a.terms_[i].mono, b.terms_[j].mono);
    }
    if (c > 0) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      const auto& t = b.terms_[j++];
      out.terms_.push_back(Term<K>{subtract ? K(-t.coeff) : t.coeff, t.mono});
    } else {
      K sum = subtract ? K(a.terms_[i].coeff - b.terms_[j].coeff)
                       : K(a.terms_[i].coeff + b.terms_[j].coeff);
      if (!detail::coeff_is_zero(sum)) {
        out.terms_.push_back(Term<K>{std::move(sum), a.terms_[i].mono});
      }
      ++i;
      ++j;
    }
  }
  return out;
}

template <class K>
Polynomial<K> Polynomial<K>::minus_multiple(const K& c, const Monomial& m,
                                            const Polynomial& g) const {
  OrderPtr order = pick_order(*this, g);
  if (!m.is_one() && !order) {
    throw ArithmeticError("non-constant polynomial requires a monomial order");
  }
  const MonomialOrder* ord = order.get();
  Polynomial out(order);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  const bool unit_mono = m.is_one();
  Monomial gm;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size()) {
      gm = unit_mono ? g.terms_[j].mono : g.terms_[j].mono * m;
    }
    int s = 0;
    if (i == terms_.size()) {
      s = -1;
    } else if (j == g.terms_.size()) {
      s = 1;
    } else {
      s = cmp(ord, terms_[i].mono, gm);
    }
    if (s > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (s < 0) {
      K v = -(g.terms_[j].coeff * c);
      if (!detail::coeff_is_zero(v)) {
        out.terms_.push_back(Term<K>{std::move(v), std::move(gm)});
      }
      ++j;
    } else {
      K v = terms_[i].coeff - g.terms_[j].coeff * c;
      if (!detail::coeff_is_zero(v)) {
        out.terms_.push_back(Term<K>{std::move(v), terms_[i].mono});
      }
      ++i;
      ++j;
    }
  }
  return out;
}

template <class K>
Polynomial<K> Polynomial<K>::multiply(const Polynomial& a, const Polynomial& b) {
  OrderPtr order = pick_order(a, b);
  if (a.is_zero() || b.is_zero()) {
    return Polynomial(order);
  }
  if (a.is_constant()) {
    Polynomial r = b.scaled(a.terms_[0].coeff);
    r.order_ = order;
    return r;
  }
  if (b.is_constant()) {
    Polynomial r = a.scaled(b.terms_[0].coeff);
    r.order_ = order;
    return r;
  }
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) {
    const auto& t = small.terms_[0];
    Polynomial r = large.scaled(t.coeff, t.mono);
    r.order_ = order;
    return r;
  }
  std::unordered_map<Monomial, K, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& ta : small.terms_) {
    for (const auto& tb : large.terms_) {
      Monomial m = ta.mono * tb.mono;
      auto [it, inserted] = acc.try_emplace(std::move(m));
      if (inserted) {
        it->second = ta.coeff * tb.coeff;
      } else {
        it->second += ta.coeff * tb.coeff;
      }
    }
  }
  std::vector<Term<K>> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!detail::coeff_is_zero(c)) {
      terms.push_back(Term<K>{std::move(c), m});
    }
  }
  const MonomialOrder* ord = order.get();
  std::sort(terms.begin(), terms.end(), [ord](const Term<K>& x, const Term<K>& y) {
    return cmp(ord, x.mono, y.mono) > 0;
  });
  return from_sorted(order, std::move(terms));
}

using QPolynomial = Polynomial<Rational>;
using Assignment = std::unordered_map<SymbolId, Rational>;

/// Exact value of `f` under `values`. Throws UnknownSymbolError naming the
/// first symbol without a value.
Rational evaluate(const QPolynomial& f, const Assignment& values,
                  const SymbolTable* names = nullptr);

/// Leading term under an explicit order (the polynomial is re-sorted if it
/// carries a different one).
template <class K>
Term<K> leading_term(const Polynomial<K>& f, const OrderPtr& order) {
  if (f.is_zero()) {
    throw ArithmeticError("zero polynomial has no leading term");
  }
  if (!order || same_order(f.order(), order)) {
    return f.leading_term();
  }
  return f.with_order(order).leading_term();
}

extern template class Polynomial<Rational>;

} // namespace symprove
