#pragma once

#include "symprove/polynomial.hpp"
#include "symprove/rational_function.hpp"

#include <vector>

namespace symprove {

template <class K>
struct IdealSpec {
  std::vector<Polynomial<K>> generators;
  OrderPtr order;
};

template <class K>
struct GroebnerBasis {
  std::vector<Polynomial<K>> elements;  // descending by leading monomial
  OrderPtr order;
  bool reduced = false;
  GroebnerStats stats;
};

enum class PairSelection {
  normal,  // smallest lcm degree first, ties in creation order
  fifo,
};

/// Which basis element reduces a term when several leading monomials divide
/// it. On a Groebner basis the normal form does not depend on this.
enum class ReducerSelection { first, last };

struct GroebnerOptions {
  PairSelection selection = PairSelection::normal;
  bool criteria = true;  // coprime-leading-monomial and chain criteria
  std::size_t max_pairs = 1'000'000;
  // Reduce every term of new elements, not only the leading one.
  bool reduce_tails = true;
  // Return the reduced basis. Without it the result is a Groebner basis that
  // is monic but not inter-reduced (normal forms are the same either way).
  bool interreduce = true;
};

/// Fully reduced remainder of f modulo `basis`: f - r lies in the ideal and
/// no term of r is divisible by a leading monomial of the basis.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis,
                          const OrderPtr& order,
                          ReducerSelection selection = ReducerSelection::first);

/// Throws ArithmeticError for a zero argument.
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g, const OrderPtr& order);

/// Reduced Groebner basis (monic, inter-reduced). Throws Error for an ideal
/// without nonzero generators, BudgetExceededError past options.max_pairs.
template <class K>
GroebnerBasis<K> buchberger(const IdealSpec<K>& spec, const GroebnerOptions& options = {});

template <class K>
bool ideal_member(const Polynomial<K>& f, const GroebnerBasis<K>& gb);

/// Every S-polynomial of two elements reduces to zero.
template <class K>
bool s_pair_closed(const std::vector<Polynomial<K>>& basis, const OrderPtr& order);

/// Every generator has normal form zero modulo the basis.
template <class K>
bool contains_generators(const GroebnerBasis<K>& gb, const std::vector<Polynomial<K>>& generators);

/// Monic, and no term of an element is divisible by another leading monomial.
template <class K>
bool is_reduced(const std::vector<Polynomial<K>>& basis);

#define SYMPROVE_GROEBNER_EXTERN(K)                                                              \
  extern template Polynomial<K> normal_form(const Polynomial<K>&,                                \
                                            const std::vector<Polynomial<K>>&, const OrderPtr&,  \
                                            ReducerSelection);                                   \
  extern template Polynomial<K> s_polynomial(const Polynomial<K>&, const Polynomial<K>&,         \
                                             const OrderPtr&);                                   \
  extern template GroebnerBasis<K> buchberger(const IdealSpec<K>&, const GroebnerOptions&);      \
  extern template bool ideal_member(const Polynomial<K>&, const GroebnerBasis<K>&);              \
  extern template bool s_pair_closed(const std::vector<Polynomial<K>>&, const OrderPtr&);        \
  extern template bool contains_generators(const GroebnerBasis<K>&,                              \
                                           const std::vector<Polynomial<K>>&);                   \
  extern template bool is_reduced(const std::vector<Polynomial<K>>&);

SYMPROVE_GROEBNER_EXTERN(Rational)
SYMPROVE_GROEBNER_EXTERN(RationalFunction)

#undef SYMPROVE_GROEBNER_EXTERN

} // namespace symprove
