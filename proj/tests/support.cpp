#include "support.hpp"

namespace symprove::testing {

SmallRing::SmallRing(std::vector<std::string> names, OrderKind kind)
    : symbols(std::make_shared<SymbolTable>()) {
  for (auto& n : names) {
    vars.push_back(symbols->add(n, SymbolKind::derivative));
  }
  order = make_order(kind, vars, symbols);
}

OrderPtr SmallRing::reorder(OrderKind kind, std::vector<std::size_t> precedence) const {
  std::vector<SymbolId> prec;
  for (auto k : precedence) {
    prec.push_back(vars[k]);
  }
  return make_order(kind, std::move(prec), symbols);
}

Rational random_rational(std::mt19937_64& rng, int span, int max_den) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

QPolynomial random_polynomial(std::mt19937_64& rng, const SmallRing& ring, std::size_t terms,
                              std::uint32_t max_exp, std::uint32_t max_deg) {
  std::uniform_int_distribution<std::uint32_t> ex(0, max_exp);
  std::vector<Term<Rational>> out;
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<Monomial::Entry> e;
    std::uint32_t deg = 0;
    for (SymbolId v : ring.vars) {
      std::uint32_t k = std::min(ex(rng), max_deg - deg);
      deg += k;
      e.emplace_back(v, k);
    }
    out.push_back(Term<Rational>{random_rational(rng), Monomial(std::move(e))});
  }
  return QPolynomial(ring.order, std::move(out));
}

std::string data_path(const std::string& name) { return std::string(SYMPROVE_DATA_DIR) + "/" + name; }

} // namespace symprove::testing
