#pragma once

#include "symprove/prk_model.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symprove {

/// Closed-form scalar function of (p, q) with its partials up to order two.
struct ScalarField {
  double (*f)(double p, double q);
  double (*fp)(double p, double q);
  double (*fq)(double p, double q);
  double (*fpp)(double p, double q);
  double (*fpq)(double p, double q);
  double (*fqq)(double p, double q);
};

/// H and, for stochastic schemes, the noise Hamiltonian Ht.
struct HamiltonianInstance {
  std::string name;
  ScalarField H;
  std::optional<ScalarField> Ht;
};

/// "harmonic", "pendulum" or "cubic", optionally followed by "/q", "/sinq" or
/// "/pq" to attach a noise Hamiltonian. Throws Error for other names.
HamiltonianInstance catalogue_hamiltonian(std::string_view name);
std::vector<std::string> catalogue_names();

struct StepOptions {
  double tolerance = 1e-14;  // absolute, on the stage values
  int max_iterations = 200;
};

struct StepResult {
  double p = 0;
  double q = 0;
  std::vector<double> P;  // stage arguments of H
  std::vector<double> Q;
  int iterations = 0;
  bool converged = false;
  double residual = 0;  // max |F(X) - X| at the returned stage values
};

/// One step of the scheme with tableau `c`. Stage arguments solve
///   P_i = p - h sum a_ij H_q(P_j, Q_j) - dB sum al_ij Ht_q(P_j, Q_j)
///   Q_i = q + h sum ah_ij H_p(P_j, Q_j) + dB sum alh_ij Ht_p(P_j, Q_j)
/// by fixed-point iteration; the step size halves after any iteration whose
/// update grew. Throws Error if h <= 0 or if dB is given exactly when the
/// tableau is deterministic. Non-convergence is reported, not thrown.
StepResult prk_step(const CoefficientSet& c, const HamiltonianInstance& ham, double p, double q,
                    double h, std::optional<double> dB = std::nullopt, const StepOptions& opt = {});

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Central differences of the one-step map. Throws Error if any of the four
/// perturbed steps fails to converge.
Matrix2 jacobian_fd(const CoefficientSet& c, const HamiltonianInstance& ham, double p, double q,
                    double h, std::optional<double> dB = std::nullopt, double eps = 1e-6,
                    const StepOptions& opt = {});

/// max |M^T J M - J|.
double symplectic_residual(const Matrix2& m);

} // namespace symprove
