#include "symprove/numeric.hpp"

#include "symprove/error.hpp"

#include <algorithm>
#include <cmath>

namespace symprove {

namespace {

double zero(double, double) { return 0; }
double one(double, double) { return 1; }

// (p^2 + q^2) / 2
const ScalarField harmonic{
    [](double p, double q) { return (p * p + q * q) / 2; },
    [](double p, double) { return p; },
    [](double, double q) { return q; },
    one, zero, one};

// p^2 / 2 - cos q
const ScalarField pendulum{
    [](double p, double q) { return p * p / 2 - std::cos(q); },
    [](double p, double) { return p; },
    [](double, double q) { return std::sin(q); },
    one, zero,
    [](double, double q) { return std::cos(q); }};

// p^2 / 2 + q^3 / 3
const ScalarField cubic{
    [](double p, double q) { return p * p / 2 + q * q * q / 3; },
    [](double p, double) { return p; },
    [](double, double q) { return q * q; },
    one, zero,
    [](double, double q) { return 2 * q; }};

const ScalarField noise_q{[](double, double q) { return q; }, zero, one, zero, zero, zero};

const ScalarField noise_sinq{
    [](double, double q) { return std::sin(q); },
    zero,
    [](double, double q) { return std::cos(q); },
    zero, zero,
    [](double, double q) { return -std::sin(q); }};

const ScalarField noise_pq{
    [](double p, double q) { return p * q; },
    [](double, double q) { return q; },
    [](double p, double) { return p; },
    zero, one, zero};

const std::pair<std::string_view, const ScalarField*> drift[] = {
    {"harmonic", &harmonic}, {"pendulum", &pendulum}, {"cubic", &cubic}};
const std::pair<std::string_view, const ScalarField*> noise[] = {
    {"q", &noise_q}, {"sinq", &noise_sinq}, {"pq", &noise_pq}};

template <std::size_t N>
const ScalarField* lookup(const std::pair<std::string_view, const ScalarField*> (&table)[N],
                          std::string_view key) {
  for (const auto& [name, field] : table) {
    if (name == key) {
      return field;
    }
  }
  return nullptr;
}

std::vector<std::vector<double>> to_double(const std::vector<std::vector<Rational>>& m) {
  std::vector<std::vector<double>> out;
  for (const auto& row : m) {
    std::vector<double> r;
    for (const auto& x : row) {
      r.push_back(x.get_d());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<double> to_double(const std::vector<Rational>& v) {
  std::vector<double> out;
  for (const auto& x : v) {
    out.push_back(x.get_d());
  }
  return out;
}

} // namespace

HamiltonianInstance catalogue_hamiltonian(std::string_view name) {
  auto slash = name.find('/');
  std::string_view h = name.substr(0, slash);
  const ScalarField* H = lookup(drift, h);
  if (!H) {
    throw Error("unknown Hamiltonian '" + std::string(name) + "'");
  }
  HamiltonianInstance out{std::string(name), *H, std::nullopt};
  if (slash != std::string_view::npos) {
    const ScalarField* Ht = lookup(noise, name.substr(slash + 1));
    if (!Ht) {
      throw Error("unknown noise Hamiltonian in '" + std::string(name) + "'");
    }
    out.Ht = *Ht;
  }
  return out;
}

std::vector<std::string> catalogue_names() {
  std::vector<std::string> out;
  for (const auto& [h, f] : drift) {
    (void)f;
    out.emplace_back(h);
    for (const auto& [n, g] : noise) {
      (void)g;
      out.push_back(std::string(h) + "/" + std::string(n));
    }
  }
  return out;
}

StepResult prk_step(const CoefficientSet& c, const HamiltonianInstance& ham, double p, double q,
                    double h, std::optional<double> dB, const StepOptions& opt) {
  if (!(h > 0)) {
    throw Error("step size must be positive");
  }
  const bool stochastic = !c.al.empty();
  if (stochastic != dB.has_value()) {
    throw Error(stochastic ? "stochastic tableau needs a Brownian increment"
                           : "deterministic tableau takes no Brownian increment");
  }
  if (stochastic && !ham.Ht) {
    throw Error("stochastic step needs a noise Hamiltonian");
  }
  const std::size_t s = c.stages;
  const auto a = to_double(c.a);
  const auto ah = to_double(c.ah);
  const auto b = to_double(c.b);
  const auto bh = to_double(c.bh);
  const auto al = stochastic ? to_double(c.al) : std::vector<std::vector<double>>{};
  const auto alh = stochastic ? to_double(c.alh) : std::vector<std::vector<double>>{};
  const auto be = stochastic ? to_double(c.be) : std::vector<double>{};
  const auto beh = stochastic ? to_double(c.beh) : std::vector<double>{};
  const double w = dB.value_or(0);

  std::vector<double> fp(s), fq(s), gp(s), gq(s);
  auto slopes = [&](const std::vector<double>& P, const std::vector<double>& Q) {
    for (std::size_t j = 0; j < s; ++j) {
      fq[j] = ham.H.fq(P[j], Q[j]);
      fp[j] = ham.H.fp(P[j], Q[j]);
      if (stochastic) {
        gq[j] = ham.Ht->fq(P[j], Q[j]);
        gp[j] = ham.Ht->fp(P[j], Q[j]);
      }
    }
  };
  auto image = [&](std::vector<double>& P, std::vector<double>& Q) {
    for (std::size_t i = 0; i < s; ++i) {
      double dp = 0;
      double dq = 0;
      for (std::size_t j = 0; j < s; ++j) {
        dp -= h * a[i][j] * fq[j];
        dq += h * ah[i][j] * fp[j];
        if (stochastic) {
          dp -= w * al[i][j] * gq[j];
          dq += w * alh[i][j] * gp[j];
        }
      }
      P[i] = p + dp;
      Q[i] = q + dq;
    }
  };

  StepResult r;
  r.P.assign(s, p);
  r.Q.assign(s, q);
  std::vector<double> FP(s), FQ(s);
  double damping = 1;
  double last = INFINITY;
  for (;;) {
    slopes(r.P, r.Q);
    image(FP, FQ);
    double res = 0;
    for (std::size_t i = 0; i < s; ++i) {
      res = std::max({res, std::abs(FP[i] - r.P[i]), std::abs(FQ[i] - r.Q[i])});
    }
    r.residual = res;
    if (res <= opt.tolerance) {
      r.converged = true;
      break;
    }
    if (r.iterations >= opt.max_iterations || !std::isfinite(res)) {
      break;
    }
    if (res > last && damping > 1.0 / 64) {
      damping /= 2;
    }
    last = res;
    for (std::size_t i = 0; i < s; ++i) {
      r.P[i] += damping * (FP[i] - r.P[i]);
      r.Q[i] += damping * (FQ[i] - r.Q[i]);
    }
    ++r.iterations;
  }

  slopes(r.P, r.Q);
  r.p = p;
  r.q = q;
  for (std::size_t i = 0; i < s; ++i) {
    r.p -= h * b[i] * fq[i];
    r.q += h * bh[i] * fp[i];
    if (stochastic) {
      r.p -= w * be[i] * gq[i];
      r.q += w * beh[i] * gp[i];
    }
  }
  return r;
}

Matrix2 jacobian_fd(const CoefficientSet& c, const HamiltonianInstance& ham, double p, double q,
                    double h, std::optional<double> dB, double eps, const StepOptions& opt) {
  auto step = [&](double pp, double qq) {
    StepResult r = prk_step(c, ham, pp, qq, h, dB, opt);
    if (!r.converged) {
      throw Error("stage iteration did not converge at a perturbed point");
    }
    return r;
  };
  StepResult pp = step(p + eps, q);
  StepResult pm = step(p - eps, q);
  StepResult qp = step(p, q + eps);
  StepResult qm = step(p, q - eps);
  Matrix2 m;
  m[0][0] = (pp.p - pm.p) / (2 * eps);
  m[1][0] = (pp.q - pm.q) / (2 * eps);
  m[0][1] = (qp.p - qm.p) / (2 * eps);
  m[1][1] = (qp.q - qm.q) / (2 * eps);
  return m;
}

double symplectic_residual(const Matrix2& m) {
  // J = [[0, 1], [-1, 0]]
  double jm[2][2] = {{m[1][0], m[1][1]}, {-m[0][0], -m[0][1]}};
  double out = 0;
  const double j[2][2] = {{0, 1}, {-1, 0}};
  for (int r = 0; r < 2; ++r) {
    for (int k = 0; k < 2; ++k) {
      double v = m[0][r] * jm[0][k] + m[1][r] * jm[1][k];
      out = std::max(out, std::abs(v - j[r][k]));
    }
  }
  return out;
}

} // namespace symprove
