#pragma once

#include "symprove/groebner.hpp"
#include "symprove/prk_model.hpp"

#include <optional>
#include <string>

namespace symprove {

/// g_G as numerator / denominator over Q in the parameter symbols (RK
/// coefficients, h, dB, H-parameters), ordered by model.parameter_order().
/// normalize() scales both so the denominator's constant term is 1.
struct GGExpression {
  QPolynomial numerator;
  QPolynomial denominator;
  std::size_t stage1_basis_size = 0;

  RationalFunction fraction() const { return RationalFunction(numerator, denominator); }
  void normalize();
};

/// a/b = c/d by cross-multiplication, no gcd involved.
bool equivalent(const GGExpression& x, const GGExpression& y);

/// Groebner basis of the variational system over Q(parameters), then the
/// normal form of the target. Throws SingularSystemError unless the basis
/// pins every derivative indeterminate.
GGExpression stage1_normal_form(const PRKModel& model, const OrderPtr& order1);

/// Independent route: fraction-free elimination on the same linear system,
/// then the target evaluated on the solution.
GGExpression linear_solve_oracle(const PRKModel& model);

struct Stage2Result {
  std::size_t ideal_size = 0;
  std::size_t basis_size = 0;
  GroebnerStats stats;
  // Normal forms of the g_G fraction: 0/1 whenever the numerator reduces
  // to zero, since g_G is then zero on the variety of the conditions.
  RPolynomial numerator_nf;
  RPolynomial denominator_nf;
  // Literal normal form of the g_G denominator. It is generally not 1; the
  // denominator is 1 at h = dB = 0, which keeps g_G defined there.
  RPolynomial denominator_reduced;
  bool denominator_is_one_at_zero_step = false;

  bool verified() const {
    return numerator_nf.is_zero() && denominator_nf.is_one() && denominator_is_one_at_zero_step;
  }
};

/// Reduces the g_G numerator and denominator modulo the symplectic conditions,
/// with RK coefficients as variables (ordered by `order2`) and the other
/// parameters as coefficients. BudgetExceededError escapes.
Stage2Result stage2_reduce(const GGExpression& gg, const PRKModel& model, const OrderPtr& order2,
                           const GroebnerOptions& options = {});

enum class Stage1OrderChoice { paper, reversed, grevlex };
std::string_view to_string(Stage1OrderChoice c);

/// Paper order = the kind's own lex pattern.
OrderPtr stage1_order(const PRKModel& model, Stage1OrderChoice choice);

struct ProveOptions {
  Stage1OrderChoice order1 = Stage1OrderChoice::paper;
  OrderKind order2 = OrderKind::grevlex;
  bool cross_check = false;
  bool emit_gg = false;
  std::size_t max_pairs = 1'000'000;
};

enum class Verdict { symplectic_verified, not_reduced };
std::string_view to_string(Verdict v);

struct ProofCertificate {
  struct Stage1 {
    std::size_t equations = 0;
    std::size_t unknowns = 0;
    std::size_t basis_size = 0;
    std::size_t numerator_terms = 0;
    std::size_t denominator_terms = 0;
    std::string gg_digest;  // sha-256 of the rendered g_G
    std::string cross_check = "not run";  // "agree", "disagree", "not run"
    std::optional<std::string> gg_numerator;
    std::optional<std::string> gg_denominator;
    friend bool operator==(const Stage1&, const Stage1&) = default;
  };
  struct Stage2 {
    std::size_t ideal_size = 0;
    std::size_t basis_size = 0;
    std::string numerator_nf;
    std::string denominator_nf;
    std::string denominator_reduced;
    std::size_t denominator_reduced_terms = 0;
    std::string denominator_at_zero_step;
    friend bool operator==(const Stage2&, const Stage2&) = default;
  };
  struct Timings {
    double stage1_ms = 0;
    double cross_check_ms = 0;
    double stage2_ms = 0;
  };

  SystemKind kind = SystemKind::deterministic;
  std::size_t stages = 0;
  bool identify_mixed_partials = true;
  ProveOptions options;
  std::optional<Stage1> stage1;
  std::optional<Stage2> stage2;
  Verdict verdict = Verdict::not_reduced;
  std::string note;
  std::optional<std::string> error;
  Timings timings;
  std::string input_digest;

  /// Everything except timings.
  bool same_content(const ProofCertificate& other) const;
};

/// Runs both stages (and the oracle when asked). Stage failures are recorded
/// in the certificate as NOT-REDUCED with the error text, never thrown.
ProofCertificate prove(const PRKSpec& spec, const ProveOptions& options = {});

/// Hex sha-256.
std::string sha256_hex(std::string_view data);

} // namespace symprove
