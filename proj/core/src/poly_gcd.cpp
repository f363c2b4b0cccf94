#include "symprove/poly_gcd.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <unordered_map>

namespace symprove {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

constexpr u64 kPrime = 0x1fffffffffffffffULL;  // 2^61 - 1

u64 mul_mod(u64 a, u64 b) {
  u128 p = static_cast<u128>(a) * b;
  u64 lo = static_cast<u64>(p & kPrime);
  u64 hi = static_cast<u64>(p >> 61);
  u64 s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

u64 add_mod(u64 a, u64 b) {
  u64 s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

u64 sub_mod(u64 a, u64 b) { return a >= b ? a - b : a + kPrime - b; }

u64 pow_mod(u64 base, u64 exp) {
  u64 result = 1;
  while (exp > 0) {
    if (exp & 1U) {
      result = mul_mod(result, base);
    }
    base = mul_mod(base, base);
    exp >>= 1U;
  }
  return result;
}

u64 inv_mod(u64 a) { return pow_mod(a, kPrime - 2); }

std::optional<u64> rational_mod(const Rational& q) {
  u64 num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  u64 den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) {
    return std::nullopt;
  }
  return mul_mod(num, inv_mod(den));
}

std::mt19937_64& rng() {
  thread_local std::mt19937_64 engine(0x5eed5eedULL);
  return engine;
}

using UPoly = std::vector<u64>;  // dense, index = degree

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) {
    p.pop_back();
  }
}

// Degree of gcd over Z_p[x]; -1 encodes the zero polynomial.
int univariate_gcd_degree(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    u64 inv_lead = inv_mod(b.back());
    while (a.size() >= b.size()) {
      u64 factor = mul_mod(a.back(), inv_lead);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = sub_mod(a[shift + i], mul_mod(factor, b[i]));
      }
      trim(a);
      if (a.empty()) {
        break;
      }
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

using DegreeMap = std::map<SymbolId, std::uint32_t>;

DegreeMap degree_vector(const QPolynomial& f) {
  DegreeMap out;
  for (const auto& t : f.terms()) {
    for (const auto& [id, exp] : t.mono.entries()) {
      auto& d = out[id];
      d = std::max(d, exp);
    }
  }
  return out;
}

// Univariate images of f in every variable at one evaluation point.
std::map<SymbolId, UPoly> images(const QPolynomial& f, const std::unordered_map<SymbolId, u64>& point,
                                 const std::unordered_map<SymbolId, u64>& inverse, bool& ok) {
  std::map<SymbolId, UPoly> out;
  for (const auto& t : f.terms()) {
    auto c = rational_mod(t.coeff);
    if (!c) {
      ok = false;
      return out;
    }
    u64 full = *c;
    for (const auto& [id, exp] : t.mono.entries()) {
      full = mul_mod(full, pow_mod(point.at(id), exp));
    }
    // Every variable of the point gets a slot, including exponent 0.
    for (const auto& [id, inv] : inverse) {
      std::uint32_t exp = t.mono.exponent(id);
      u64 partial = exp == 0 ? full : mul_mod(full, pow_mod(inv, exp));
      UPoly& u = out[id];
      if (u.size() <= exp) {
        u.resize(exp + 1, 0);
      }
      u[exp] = add_mod(u[exp], partial);
    }
  }
  return out;
}

// Upper bounds for deg_x gcd(a, b) for every variable x of a and b (which
// must share their variable set). nullopt when no good point was found.
std::optional<DegreeMap> modular_gcd_degrees(const QPolynomial& a, const QPolynomial& b,
                                             const DegreeMap& da, const DegreeMap& db) {
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::unordered_map<SymbolId, u64> point;
    std::unordered_map<SymbolId, u64> inverse;
    std::uniform_int_distribution<u64> dist(2, kPrime - 1);
    for (const auto& [id, deg] : da) {
      (void)deg;
      u64 v = dist(rng());
      point[id] = v;
      inverse[id] = inv_mod(v);
    }
    bool ok = true;
    auto ia = images(a, point, inverse, ok);
    auto ib = images(b, point, inverse, ok);
    if (!ok) {
      continue;
    }
    DegreeMap out;
    bool good = true;
    for (const auto& [id, deg] : da) {
      UPoly& ua = ia[id];
      UPoly& ub = ib[id];
      trim(ua);
      trim(ub);
      if (static_cast<std::uint32_t>(ua.size()) != deg + 1 ||
          static_cast<std::uint32_t>(ub.size()) != db.at(id) + 1) {
        good = false;
        break;
      }
      out[id] = static_cast<std::uint32_t>(univariate_gcd_degree(ua, ub));
    }
    if (good) {
      return out;
    }
  }
  return std::nullopt;
}

// Coefficients of f viewed as a polynomial in x, index = degree of x.
std::vector<QPolynomial> to_univariate(const QPolynomial& f, SymbolId x) {
  std::vector<std::vector<Term<Rational>>> buckets(f.degree_in(x) + 1);
  for (const auto& t : f.terms()) {
    std::uint32_t e = t.mono.exponent(x);
    buckets[e].push_back(Term<Rational>{t.coeff, t.mono.quotient(Monomial::variable(x, e))});
  }
  std::vector<QPolynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // Removing x keeps the relative order of the remaining terms.
    out.push_back(QPolynomial::from_sorted(f.order(), std::move(b)));
  }
  return out;
}

QPolynomial from_univariate(const std::vector<QPolynomial>& coeffs, SymbolId x, const OrderPtr& order) {
  std::vector<Term<Rational>> terms;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    Monomial xe = Monomial::variable(x, static_cast<std::uint32_t>(e));
    for (const auto& t : coeffs[e].terms()) {
      terms.push_back(Term<Rational>{t.coeff, t.mono * xe});
    }
  }
  return QPolynomial(order, std::move(terms));
}

void trim(std::vector<QPolynomial>& u) {
  while (!u.empty() && u.back().is_zero()) {
    u.pop_back();
  }
}

QPolynomial gcd_many(std::vector<QPolynomial> polys) {
  std::erase_if(polys, [](const QPolynomial& p) { return p.is_zero(); });
  if (polys.empty()) {
    return QPolynomial();
  }
  std::stable_sort(polys.begin(), polys.end(),
                   [](const QPolynomial& a, const QPolynomial& b) { return a.size() < b.size(); });
  QPolynomial g = integer_primitive(polys[0]);
  for (std::size_t i = 1; i < polys.size() && !g.is_constant(); ++i) {
    g = gcd(g, polys[i]);
  }
  if (g.is_constant()) {
    return QPolynomial::constant(1, polys[0].order());
  }
  return g;
}

QPolynomial must_divide(const QPolynomial& a, const QPolynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) {
    throw ArithmeticError("internal error: expected exact polynomial division");
  }
  return std::move(*q);
}

QPolynomial gcd_primitive(const QPolynomial& a, const QPolynomial& b);

// Primitive pseudo-remainder sequence in x.
QPolynomial prs_gcd(const QPolynomial& a, const QPolynomial& b, SymbolId x,
                    std::optional<std::uint32_t> expected_degree) {
  ++gcd_counters().prs_runs;
  const OrderPtr& order = a.order() ? a.order() : b.order();
  auto ua = to_univariate(a, x);
  auto ub = to_univariate(b, x);
  QPolynomial ca = gcd_many(ua);
  QPolynomial cb = gcd_many(ub);
  QPolynomial content = gcd(ca, cb);
  for (auto& c : ua) {
    c = must_divide(c, ca);
  }
  for (auto& c : ub) {
    c = must_divide(c, cb);
  }
  QPolynomial pa = from_univariate(ua, x, order);
  QPolynomial pb = from_univariate(ub, x, order);
  if (ua.size() < ub.size()) {
    std::swap(ua, ub);
    std::swap(pa, pb);
  }
  auto accept = [&](const std::vector<QPolynomial>& candidate) -> std::optional<QPolynomial> {
    QPolynomial g = integer_primitive(from_univariate(candidate, x, order));
    if (divide_exact(pa, g) && divide_exact(pb, g)) {
      return g;
    }
    return std::nullopt;
  };
  if (expected_degree && ub.size() - 1 == *expected_degree) {
    if (auto g = accept(ub)) {
      return integer_primitive(content * *g);
    }
  }
  std::vector<QPolynomial> result;
  while (true) {
    // r <- lc(ub)^k * ua mod ub
    std::vector<QPolynomial> r = ua;
    const QPolynomial& lead = ub.back();
    const std::size_t n = ub.size() - 1;
    while (!r.empty() && r.size() - 1 >= n) {
      QPolynomial lr = r.back();
      std::size_t shift = r.size() - 1 - n;
      for (auto& c : r) {
        c = c * lead;
      }
      for (std::size_t i = 0; i <= n; ++i) {
        r[shift + i] -= lr * ub[i];
      }
      trim(r);
    }
    if (r.empty()) {
      result = ub;
      break;
    }
    if (r.size() == 1) {
      result = {QPolynomial::constant(1, order)};
      break;
    }
    QPolynomial rc = gcd_many(r);
    for (auto& c : r) {
      c = must_divide(c, rc);
    }
    if (expected_degree && r.size() - 1 == *expected_degree) {
      if (auto g = accept(r)) {
        return integer_primitive(content * *g);
      }
    }
    ua = std::move(ub);
    ub = std::move(r);
  }
  return integer_primitive(content * from_univariate(result, x, order));
}

// a, b: integer primitive, no monomial content, both non-constant.
QPolynomial gcd_primitive(const QPolynomial& a, const QPolynomial& b) {
  const OrderPtr& order = a.order() ? a.order() : b.order();
  if (a == b) {
    return a;
  }
  DegreeMap da = degree_vector(a);
  DegreeMap db = degree_vector(b);
  for (const auto& [id, deg] : da) {
    (void)deg;
    if (db.count(id) == 0) {
      std::vector<QPolynomial> parts = to_univariate(a, id);
      parts.push_back(b);
      return gcd_many(std::move(parts));
    }
  }
  for (const auto& [id, deg] : db) {
    (void)deg;
    if (da.count(id) == 0) {
      std::vector<QPolynomial> parts = to_univariate(b, id);
      parts.push_back(a);
      return gcd_many(std::move(parts));
    }
  }
  auto bounds = modular_gcd_degrees(a, b, da, db);
  if (bounds) {
    bool trivial = std::all_of(bounds->begin(), bounds->end(),
                               [](const auto& kv) { return kv.second == 0; });
    if (trivial) {
      ++gcd_counters().modular_trivial;
      return QPolynomial::constant(1, order);
    }
    if (*bounds == da && divide_exact(b, a)) {
      return a;
    }
    if (*bounds == db && divide_exact(a, b)) {
      return b;
    }
    // A variable absent from the gcd splits the problem into coefficient gcds.
    std::optional<SymbolId> split;
    std::uint32_t best = 0;
    for (const auto& [id, d] : *bounds) {
      if (d == 0 && da[id] + db[id] > best) {
        best = da[id] + db[id];
        split = id;
      }
    }
    if (split) {
      std::vector<QPolynomial> parts = to_univariate(a, *split);
      for (auto& c : to_univariate(b, *split)) {
        parts.push_back(std::move(c));
      }
      return gcd_many(std::move(parts));
    }
  }
  SymbolId main = da.begin()->first;
  std::uint32_t best = ~0U;
  for (const auto& [id, d] : da) {
    std::uint32_t deg = std::max(d, db[id]);
    if (bounds && bounds->at(id) == 0) {
      continue;
    }
    if (deg < best) {
      best = deg;
      main = id;
    }
  }
  std::optional<std::uint32_t> expected;
  if (bounds) {
    expected = bounds->at(main);
  }
  return prs_gcd(a, b, main, expected);
}

} // namespace

GcdCounters& gcd_counters() {
  thread_local GcdCounters counters;
  return counters;
}

std::optional<QPolynomial> divide_exact(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) {
    throw ArithmeticError("division by the zero polynomial");
  }
  if (a.is_zero()) {
    return a;
  }
  if (b.is_constant()) {
    return a.scaled(Rational(1 / b.leading_coeff()));
  }
  const OrderPtr& order = a.order() ? a.order() : b.order();
  if (!same_order(a.order(), b.order())) {
    throw ArithmeticError("polynomials use different monomial orders");
  }
  if (a.is_constant() || b.total_degree() > a.total_degree()) {
    return std::nullopt;
  }
  const Monomial& lb = b.leading_monomial();
  const Rational inv_lc = 1 / b.leading_coeff();
  if (b.size() == 1) {
    std::vector<Term<Rational>> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!lb.divides(t.mono)) {
        return std::nullopt;
      }
      out.push_back(Term<Rational>{t.coeff * inv_lc, t.mono.quotient(lb)});
    }
    return QPolynomial::from_sorted(order, std::move(out));
  }
  // Remainder kept in a descending ordered map, so each step costs O(|b| log |r|).
  auto desc = [&order](const Monomial& x, const Monomial& y) { return order->compare(x, y) > 0; };
  std::map<Monomial, Rational, decltype(desc)> rem(desc);
  for (const auto& t : a.terms()) {
    rem.emplace_hint(rem.end(), t.mono, t.coeff);
  }
  std::vector<Term<Rational>> quotient;
  const auto tail = b.terms().subspan(1);
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lb.divides(top->first)) {
      return std::nullopt;
    }
    Rational qc = top->second * inv_lc;
    Monomial qm = top->first.quotient(lb);
    rem.erase(top);
    for (const auto& t : tail) {
      Monomial m = t.mono * qm;
      auto [it, inserted] = rem.try_emplace(std::move(m));
      it->second -= t.coeff * qc;
      if (!inserted && is_zero(it->second)) {
        rem.erase(it);
      }
    }
    quotient.push_back(Term<Rational>{std::move(qc), std::move(qm)});
  }
  return QPolynomial::from_sorted(order, std::move(quotient));
}

Monomial monomial_content(const QPolynomial& f) {
  if (f.is_zero()) {
    return Monomial{};
  }
  Monomial g = f.terms()[0].mono;
  for (const auto& t : f.terms().subspan(1)) {
    if (g.is_one()) {
      break;
    }
    g = Monomial::gcd(g, t.mono);
  }
  return g;
}

Rational scalar_content(const QPolynomial& f) {
  if (f.is_zero()) {
    return 1;
  }
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

QPolynomial integer_primitive(const QPolynomial& f) {
  if (f.is_zero()) {
    return f;
  }
  Rational c = scalar_content(f);
  if (sgn(f.leading_coeff()) < 0) {
    c = -c;
  }
  if (c == 1) {
    return f;
  }
  return f.scaled(Rational(1 / c));
}

QPolynomial gcd(const QPolynomial& a, const QPolynomial& b) {
  ++gcd_counters().calls;
  if (!same_order(a.order(), b.order())) {
    throw ArithmeticError("polynomials use different monomial orders");
  }
  const OrderPtr& order = a.order() ? a.order() : b.order();
  if (a.is_zero()) {
    return integer_primitive(b);
  }
  if (b.is_zero()) {
    return integer_primitive(a);
  }
  if (a.is_constant() || b.is_constant()) {
    return QPolynomial::constant(1, order);
  }
  Monomial ma = monomial_content(a);
  Monomial mb = monomial_content(b);
  Monomial mg = Monomial::gcd(ma, mb);
  QPolynomial pa = integer_primitive(ma.is_one() ? a : *divide_exact(a, QPolynomial::term(1, ma, order)));
  QPolynomial pb = integer_primitive(mb.is_one() ? b : *divide_exact(b, QPolynomial::term(1, mb, order)));
  QPolynomial g = (pa.is_constant() || pb.is_constant()) ? QPolynomial::constant(1, order)
                                                         : gcd_primitive(pa, pb);
  if (!mg.is_one()) {
    g = g.scaled(Rational(1), mg);
  }
  return integer_primitive(g);
}

} // namespace symprove
