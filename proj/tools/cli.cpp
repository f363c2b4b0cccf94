#include "cli.hpp"

#include "symprove/certificate.hpp"
#include "symprove/error.hpp"
#include "symprove/groebner.hpp"
#include "symprove/io.hpp"
#include "symprove/numeric.hpp"
#include "symprove/prover.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>
#include <sstream>

namespace symprove::cli {

namespace {

const std::map<std::string, SystemKind> kinds{{"det", SystemKind::deterministic},
                                              {"stoch", SystemKind::stochastic}};
const std::map<std::string, Stage1OrderChoice> order1s{{"paper", Stage1OrderChoice::paper},
                                                       {"reversed", Stage1OrderChoice::reversed},
                                                       {"grevlex", Stage1OrderChoice::grevlex}};
const std::map<std::string, OrderKind> order2s{{"grevlex", OrderKind::grevlex},
                                               {"lex", OrderKind::lex}};

struct SystemArgs {
  std::string kind;
  std::size_t stages = 0;

  void add(CLI::App* app) {
    app->add_option("--kind", kind, "det or stoch")
        ->required()
        ->check(CLI::IsMember({"det", "stoch"}));
    app->add_option("--stages", stages, "number of stages")->required()->check(CLI::PositiveNumber);
  }
  PRKSpec spec() const { return PRKSpec{kinds.at(kind), stages, true}; }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file_atomic(path, text);
  }
}

int run_prove(const SystemArgs& sys, const ProveOptions& options, bool identify,
              const std::string& out_path, std::ostream& out) {
  PRKSpec spec = sys.spec();
  spec.identify_mixed_partials = identify;
  ProofCertificate cert = prove(spec, options);
  emit(render_certificate(cert), out_path, out);
  if (!out_path.empty()) {
    out << to_string(cert.verdict) << "\n";
  }
  return cert.verdict == Verdict::symplectic_verified ? exit_ok : exit_not_reduced;
}

template <class K>
std::vector<Polynomial<K>> basis_of(const std::vector<Polynomial<K>>& gens, const OrderPtr& order) {
  return buchberger(IdealSpec<K>{gens, order}).elements;
}

int run_groebner(const std::string& path, const std::string& out_path, std::ostream& out) {
  IdealFile file = parse_ideal_file(read_file(path));
  std::ostringstream text;
  if (file.has_parameters()) {
    std::vector<RPolynomial> gens;
    for (const auto& g : file.generators) {
      gens.push_back(file.to_parametric(g));
    }
    for (const auto& g : basis_of(gens, file.order)) {
      text << render_polynomial(g) << "\n";
    }
  } else {
    std::vector<QPolynomial> gens;
    for (const auto& g : file.generators) {
      gens.push_back(file.to_rational(g));
    }
    for (const auto& g : basis_of(gens, file.order)) {
      text << render_polynomial(g) << "\n";
    }
  }
  emit(text.str(), out_path, out);
  return exit_ok;
}

int run_reduce(const std::string& path, const std::string& expr, std::ostream& out) {
  IdealFile file = parse_ideal_file(read_file(path));
  QPolynomial f = file.parse(expr);
  if (file.has_parameters()) {
    std::vector<RPolynomial> gens;
    for (const auto& g : file.generators) {
      gens.push_back(file.to_parametric(g));
    }
    out << render_polynomial(normal_form(file.to_parametric(f), basis_of(gens, file.order),
                                         file.order))
        << "\n";
  } else {
    std::vector<QPolynomial> gens;
    for (const auto& g : file.generators) {
      gens.push_back(file.to_rational(g));
    }
    out << render_polynomial(normal_form(file.to_rational(f), basis_of(gens, file.order),
                                         file.order))
        << "\n";
  }
  return exit_ok;
}

int run_check_coeffs(const std::string& path, const SystemArgs& sys, std::ostream& out) {
  PRKModel model(sys.spec());
  CoefficientSet c = coefficients_from_pairs(model, parse_coefficient_file(read_file(path)));
  Assignment values = coefficient_assignment(model, c);
  auto ideal = build_symplectic_ideal(model, stage2_order(model, OrderKind::lex));
  std::size_t bad = 0;
  for (const auto& g : ideal.generators) {
    Rational v = evaluate(g, values, model.symbols().get());
    if (sgn(v) != 0) {
      out << "violated: " << render_polynomial(g) << " = " << v << "\n";
      ++bad;
    }
  }
  if (bad == 0) {
    out << "all " << ideal.generators.size() << " conditions satisfied\n";
    return exit_ok;
  }
  out << bad << " of " << ideal.generators.size() << " conditions violated\n";
  return exit_failure;
}

struct NumericArgs {
  std::string coeffs;
  std::string ham;
  double h = 0.01;
  std::optional<double> dB;
  double p0 = 0.3;
  double q0 = 0.7;
  double eps = 1e-6;
  double tolerance = 1e-6;
};

int run_numeric(const SystemArgs& sys, const NumericArgs& a, std::ostream& out) {
  PRKModel model(sys.spec());
  CoefficientSet c = coefficients_from_pairs(model, parse_coefficient_file(read_file(a.coeffs)));
  HamiltonianInstance ham = catalogue_hamiltonian(a.ham);
  std::optional<double> dB = a.dB;
  if (model.stochastic() && !dB) {
    dB = 0.0;
  }
  Matrix2 m = jacobian_fd(c, ham, a.p0, a.q0, a.h, dB, a.eps);
  double r = symplectic_residual(m);
  out.precision(6);
  out << "symplectic residual " << std::scientific << r << " (tolerance " << a.tolerance << ")\n";
  return r < a.tolerance ? exit_ok : exit_failure;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mechanical symplecticity prover for partitioned Runge-Kutta methods", "symprove"};
  app.require_subcommand(1);

  SystemArgs sys;
  std::string out_path;

  auto* prove_cmd = app.add_subcommand("prove", "prove symplecticity and write a certificate");
  ProveOptions popt;
  std::string order1 = "paper";
  std::string order2 = "grevlex";
  bool no_identify = false;
  sys.add(prove_cmd);
  prove_cmd->add_option("--order1", order1, "paper, reversed or grevlex")
      ->check(CLI::IsMember({"paper", "reversed", "grevlex"}));
  prove_cmd->add_option("--order2", order2, "grevlex or lex")
      ->check(CLI::IsMember({"grevlex", "lex"}));
  prove_cmd->add_flag("--no-identify-mixed-partials", no_identify,
                      "keep Hpq and Hqp as separate symbols");
  prove_cmd->add_flag("--cross-check", popt.cross_check, "also run the linear-algebra oracle");
  prove_cmd->add_flag("--emit-gg", popt.emit_gg, "include g_G in the certificate");
  prove_cmd->add_option("--max-pairs", popt.max_pairs, "S-pair budget for stage 2");
  prove_cmd->add_option("--out", out_path, "certificate file (default: stdout)");

  auto* gb_cmd = app.add_subcommand("groebner", "reduced Groebner basis of an ideal file");
  std::string ideal_path;
  gb_cmd->add_option("FILE", ideal_path, "ideal file")->required();
  gb_cmd->add_option("--out", out_path, "output file (default: stdout)");

  auto* reduce_cmd = app.add_subcommand("reduce", "normal form modulo an ideal file");
  std::string expr;
  reduce_cmd->add_option("FILE", ideal_path, "ideal file")->required();
  reduce_cmd->add_option("--poly", expr, "polynomial to reduce")->required();

  auto* check_cmd = app.add_subcommand("check-coeffs", "exact check of the symplectic conditions");
  SystemArgs check_sys;
  std::string coeff_path;
  check_cmd->add_option("FILE", coeff_path, "coefficient file")->required();
  check_sys.add(check_cmd);

  auto* num_cmd = app.add_subcommand("numeric-check", "finite-difference symplecticity check");
  num_cmd->set_help_flag("--help", "print this help message and exit");
  SystemArgs num_sys;
  NumericArgs nargs;
  num_sys.add(num_cmd);
  num_cmd->add_option("--coeffs", nargs.coeffs, "coefficient file")->required();
  num_cmd->add_option("--ham", nargs.ham, "catalogue Hamiltonian, e.g. pendulum or harmonic/sinq")
      ->required();
  num_cmd->add_option("--h", nargs.h, "step size")->check(CLI::PositiveNumber);
  num_cmd->add_option("--dB", nargs.dB, "Brownian increment (stochastic only)");
  num_cmd->add_option("--p0", nargs.p0, "initial p");
  num_cmd->add_option("--q0", nargs.q0, "initial q");
  num_cmd->add_option("--tol", nargs.tolerance, "residual tolerance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  try {
    if (prove_cmd->parsed()) {
      popt.order1 = order1s.at(order1);
      popt.order2 = order2s.at(order2);
      return run_prove(sys, popt, !no_identify, out_path, out);
    }
    if (gb_cmd->parsed()) {
      return run_groebner(ideal_path, out_path, out);
    }
    if (reduce_cmd->parsed()) {
      return run_reduce(ideal_path, expr, out);
    }
    if (check_cmd->parsed()) {
      return run_check_coeffs(coeff_path, check_sys, out);
    }
    if (num_cmd->parsed()) {
      return run_numeric(num_sys, nargs, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
  err << app.help();
  return exit_usage;
}

} // namespace symprove::cli
