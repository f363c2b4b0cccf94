#include "symprove/polynomial.hpp"

namespace symprove {

template class Polynomial<Rational>;

Rational evaluate(const QPolynomial& f, const Assignment& values, const SymbolTable* names) {
  Rational total = 0;
  for (const auto& t : f.terms()) {
    Rational v = t.coeff;
    for (const auto& [id, exp] : t.mono.entries()) {
      auto it = values.find(id);
      if (it == values.end()) {
        std::string name;
        if (names != nullptr && id < names->size()) {
          name = names->name(id);
        } else if (f.order() && f.order()->symbols() && id < f.order()->symbols()->size()) {
          name = f.order()->symbols()->name(id);
        } else {
          name = "#" + std::to_string(id);
        }
        throw UnknownSymbolError(name, "no value assigned to symbol '" + name + "'");
      }
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), it->second.get_num_mpz_t(), exp);
      mpz_pow_ui(power.get_den_mpz_t(), it->second.get_den_mpz_t(), exp);
      v *= power;
    }
    total += v;
  }
  return total;
}

} // namespace symprove
