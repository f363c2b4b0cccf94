#pragma once

#include "symprove/groebner.hpp"
#include "symprove/polynomial.hpp"
#include "symprove/rational_function.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace symprove {

enum class SystemKind { deterministic, stochastic };

std::string_view to_string(SystemKind kind);

struct PRKSpec {
  SystemKind kind = SystemKind::deterministic;
  std::size_t stages = 1;
  // Use one symbol for H_pq and H_qp (and for the noise Hamiltonian's pair).
  bool identify_mixed_partials = true;
};

/// Quantity whose derivative is an indeterminate of the variational system.
/// p_n / q_n are the new state; the remaining entities exist per stage.
enum class Entity { p_n, q_n, p_stage, q_stage, P, Q, Pt, Qt };

/// Initial-state coordinate a derivative is taken with respect to.
enum class Wrt { p, q };

/// Symbols of one PRK instance. Every derivative indeterminate, tableau
/// coefficient and parameter (h, dB, second derivatives of H) is registered
/// in one SymbolTable; the non-derivative symbols in creation order form the
/// parameter order used for rational-function coefficients.
///
/// Names follow one ASCII convention: a11, ah11 (a-hat), b1, bh1, al11
/// (alpha), alh11, be1 (beta), beh1, h, dB, Hpp1, Hpq1, Hqp1, Hqq1, Htpp1...
/// (noise Hamiltonian), dp_n_dp, dq_n_dq, dp_n1_dq, dP_n2_dp, dQt_n1_dq.
/// From 10 stages on, double indices are separated: a1_10.
class PRKModel {
public:
  /// Throws Error for zero stages.
  explicit PRKModel(PRKSpec spec);

  const PRKSpec& spec() const noexcept { return spec_; }
  std::size_t stages() const noexcept { return spec_.stages; }
  bool stochastic() const noexcept { return spec_.kind == SystemKind::stochastic; }
  const SymbolTablePtr& symbols() const noexcept { return symbols_; }

  /// Stage index i is 1-based and ignored for p_n / q_n.
  SymbolId derivative(Entity e, std::size_t i, Wrt w) const;

  SymbolId a(std::size_t i, std::size_t j) const { return mat(a_, i, j); }
  SymbolId ah(std::size_t i, std::size_t j) const { return mat(ah_, i, j); }
  SymbolId al(std::size_t i, std::size_t j) const { return mat(al_, i, j); }
  SymbolId alh(std::size_t i, std::size_t j) const { return mat(alh_, i, j); }
  SymbolId b(std::size_t i) const { return vec(b_, i); }
  SymbolId bh(std::size_t i) const { return vec(bh_, i); }
  SymbolId be(std::size_t i) const { return vec(be_, i); }
  SymbolId beh(std::size_t i) const { return vec(beh_, i); }
  SymbolId h() const noexcept { return h_; }
  SymbolId dB() const;  // stochastic only
  SymbolId Hpp(std::size_t i) const { return vec(hpp_, i); }
  SymbolId Hpq(std::size_t i) const { return vec(hpq_, i); }
  SymbolId Hqp(std::size_t i) const { return vec(hqp_, i); }
  SymbolId Hqq(std::size_t i) const { return vec(hqq_, i); }
  SymbolId Htpp(std::size_t i) const { return vec(htpp_, i); }
  SymbolId Htpq(std::size_t i) const { return vec(htpq_, i); }
  SymbolId Htqp(std::size_t i) const { return vec(htqp_, i); }
  SymbolId Htqq(std::size_t i) const { return vec(htqq_, i); }

  const std::vector<SymbolId>& derivative_symbols() const noexcept { return derivatives_; }
  const std::vector<SymbolId>& rk_symbols() const noexcept { return rk_; }
  /// h, dB and the H-parameters.
  const std::vector<SymbolId>& other_parameters() const noexcept { return others_; }
  /// Every non-derivative symbol in creation order.
  const std::vector<SymbolId>& parameter_symbols() const noexcept { return params_; }

  /// Grevlex over parameter_symbols(); the internal order of coefficient
  /// polynomials in stage 1.
  const OrderPtr& parameter_order() const noexcept { return param_order_; }
  /// Grevlex over other_parameters(); coefficient order in stage 2.
  const OrderPtr& other_parameter_order() const noexcept { return other_order_; }

private:
  SymbolId mat(const std::vector<SymbolId>& m, std::size_t i, std::size_t j) const;
  SymbolId vec(const std::vector<SymbolId>& v, std::size_t i) const;

  PRKSpec spec_;
  SymbolTablePtr symbols_;
  std::vector<SymbolId> derivative_ids_;  // indexed by derivative_slot()
  std::vector<SymbolId> a_, ah_, al_, alh_, b_, bh_, be_, beh_;
  std::vector<SymbolId> hpp_, hpq_, hqp_, hqq_, htpp_, htpq_, htqp_, htqq_;
  SymbolId h_ = 0;
  SymbolId db_ = 0;
  std::vector<SymbolId> derivatives_, rk_, others_, params_;
  OrderPtr param_order_;
  OrderPtr other_order_;
};

/// The variational (stage-1) equations as lhs - rhs, each linear in the
/// derivative indeterminates, with coefficients in Q(parameters).
IdealSpec<RationalFunction> build_variational_ideal(const PRKModel& model, const OrderPtr& order);

/// -(dq_n/dq)(dp_n/dp) + (dp_n/dq)(dq_n/dp) + 1.
RPolynomial build_target(const PRKModel& model, const OrderPtr& order);

/// Symplectic conditions on the tableau, over Q in the RK coefficients.
IdealSpec<Rational> build_symplectic_ideal(const PRKModel& model, const OrderPtr& order);

enum class Stage1Style {
  deterministic_paper,  // new state highest, then P, Q, stage derivatives
  stochastic_paper,     // stage derivatives highest, new state lowest
  reversed,             // deterministic pattern reversed
  grevlex,              // deterministic pattern under grevlex
};

std::string_view to_string(Stage1Style style);

OrderPtr stage1_order(const PRKModel& model, Stage1Style style);

/// Stage-2 order over the RK coefficients in the reference pattern
/// (bh2 > bh1 > b2 > b1 > ah22 > ... > a11, or be2 > b2 > ... > ah11).
OrderPtr stage2_order(const PRKModel& model, OrderKind kind);

/// Reference orders: stage 1 in the kind's own
/// pattern under lex, stage 2 under lex.
OrderPtr default_variable_order(const PRKModel& model, int stage);

/// Concrete tableau. Stochastic-only members are empty for deterministic sets.
struct CoefficientSet {
  std::size_t stages = 0;
  std::vector<std::vector<Rational>> a, ah, al, alh;
  std::vector<Rational> b, bh, be, beh;
};

/// Exact point on the symplectic-condition variety: nonzero b, arbitrary ah,
/// bh = b, a_ji = b_i (b_j - ah_ij) / b_j; stochastic adds be, beh = be,
/// al_ji = be_i (b_j - ah_ij) / b_j and alh_ij = beh_j (b_i - a_ji) / b_i.
CoefficientSet random_symplectic_coefficients(const PRKSpec& spec, std::uint64_t seed);

/// RK-coefficient values keyed by the model's symbols.
Assignment coefficient_assignment(const PRKModel& model, const CoefficientSet& c);

/// Builds a CoefficientSet from `name = value` pairs. Throws Error naming
/// missing or unknown keys.
CoefficientSet coefficients_from_pairs(const PRKModel& model,
                                       const std::vector<std::pair<std::string, Rational>>& pairs);

} // namespace symprove
