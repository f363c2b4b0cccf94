#include "symprove/prover.hpp"

#include "symprove/error.hpp"
#include "symprove/io.hpp"
#include "symprove/poly_gcd.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

namespace symprove {

void GGExpression::normalize() {
  Rational c = denominator.constant_term();
  if (sgn(c) != 0) {
    Rational inv = 1 / c;
    numerator = numerator.scaled(inv);
    denominator = denominator.scaled(inv);
    return;
  }
  Rational lc = denominator.leading_coeff();
  numerator = numerator.scaled(1 / lc);
  denominator = denominator.scaled(1 / lc);
}

bool equivalent(const GGExpression& x, const GGExpression& y) {
  return x.numerator * y.denominator == y.numerator * x.denominator;
}

namespace {

QPolynomial exact_quotient(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_one()) {
    return a;
  }
  auto q = divide_exact(a, b);
  if (!q) {
    throw ArithmeticError("fraction-free elimination lost exactness");
  }
  return std::move(*q);
}

QPolynomial power(const QPolynomial& f, std::uint32_t e) {
  QPolynomial out = QPolynomial::constant(1, f.order());
  for (std::uint32_t k = 0; k < e; ++k) {
    out = out * f;
  }
  return out;
}

struct Component {
  std::vector<SymbolId> unknowns;
  std::vector<std::size_t> rows;
};

// Unknowns sharing an equation end up in one block; the p- and q-derivatives
// never mix, and solving them apart keeps minors at block size.
std::vector<Component> split_blocks(const std::vector<RPolynomial>& eqs,
                                    const std::vector<SymbolId>& unknowns) {
  std::unordered_map<SymbolId, std::size_t> index;
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    index[unknowns[k]] = k;
  }
  std::vector<std::size_t> parent(unknowns.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  std::vector<std::size_t> row_anchor;
  for (const auto& eq : eqs) {
    std::optional<std::size_t> first;
    for (const auto& t : eq.terms()) {
      if (t.mono.is_one()) {
        continue;
      }
      if (t.mono.degree() != 1) {
        throw Error("variational equation is not linear");
      }
      std::size_t k = index.at(t.mono.entries()[0].first);
      if (first) {
        parent[find(k)] = find(*first);
      } else {
        first = k;
      }
    }
    if (!first) {
      throw SingularSystemError("equation without unknowns");
    }
    row_anchor.push_back(*first);
  }
  std::map<std::size_t, Component> blocks;
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    blocks[find(k)].unknowns.push_back(unknowns[k]);
  }
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    blocks[find(row_anchor[r])].rows.push_back(r);
  }
  std::vector<Component> out;
  for (auto& [root, c] : blocks) {
    if (c.rows.size() != c.unknowns.size()) {
      throw SingularSystemError("variational system is not square");
    }
    out.push_back(std::move(c));
  }
  return out;
}

QPolynomial polynomial_coefficient(const RationalFunction& c) {
  if (!c.is_polynomial()) {
    throw Error("variational coefficient is not a polynomial");
  }
  return c.numerator().scaled(1 / c.denominator().constant_term());
}

struct BlockSolution {
  QPolynomial det;                                  // common denominator
  std::unordered_map<SymbolId, QPolynomial> scaled;  // det * x for the wanted unknowns
};

// Bareiss elimination with the wanted unknowns as the last columns, then
// fraction-free back substitution only as far as those columns.
BlockSolution solve_block(const std::vector<RPolynomial>& eqs, Component block,
                          const std::vector<SymbolId>& wanted, const OrderPtr& param_order) {
  std::stable_partition(block.unknowns.begin(), block.unknowns.end(), [&](SymbolId id) {
    return std::find(wanted.begin(), wanted.end(), id) == wanted.end();
  });
  const std::size_t n = block.unknowns.size();
  std::unordered_map<SymbolId, std::size_t> col;
  for (std::size_t k = 0; k < n; ++k) {
    col[block.unknowns[k]] = k;
  }
  const QPolynomial zero(param_order);
  std::vector<std::vector<QPolynomial>> m(n, std::vector<QPolynomial>(n + 1, zero));
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& t : eqs[block.rows[r]].terms()) {
      QPolynomial c = polynomial_coefficient(t.coeff);
      if (t.mono.is_one()) {
        m[r][n] = -c;
      } else {
        m[r][col.at(t.mono.entries()[0].first)] = c;
      }
    }
  }

  // Pivot on the smallest entry, fewest row nonzeros breaking ties, taking
  // the wanted columns only once the others are used up.
  std::size_t free_cols = 0;
  while (free_cols < n && std::find(wanted.begin(), wanted.end(), block.unknowns[free_cols]) ==
                              wanted.end()) {
    ++free_cols;
  }
  auto row_weight = [&](std::size_t r) {
    return std::count_if(m[r].begin(), m[r].end(), [](const QPolynomial& e) { return !e.is_zero(); });
  };
  QPolynomial prev = QPolynomial::constant(1, param_order);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t col_end = k < free_cols ? free_cols : n;
    std::size_t pr = n;
    std::size_t pc = n;
    std::pair<std::size_t, std::ptrdiff_t> best{};
    for (std::size_t r = k; r < n; ++r) {
      for (std::size_t c = k; c < col_end; ++c) {
        if (m[r][c].is_zero()) {
          continue;
        }
        std::pair<std::size_t, std::ptrdiff_t> w{m[r][c].size(), row_weight(r)};
        if (pr == n || w < best) {
          best = w;
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == n) {
      throw SingularSystemError("variational system is singular");
    }
    std::swap(m[k], m[pr]);
    if (pc != k) {
      for (auto& row : m) {
        std::swap(row[k], row[pc]);
      }
      std::swap(block.unknowns[k], block.unknowns[pc]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        QPolynomial v = m[k][k] * m[i][j];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) {
          v -= m[i][k] * m[k][j];
        }
        m[i][j] = exact_quotient(v, prev);
      }
      m[i][k] = zero;
    }
    prev = m[k][k];
  }

  BlockSolution out;
  out.det = m[n - 1][n - 1];
  std::vector<QPolynomial> y(n, zero);
  std::size_t first_wanted = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (std::find(wanted.begin(), wanted.end(), block.unknowns[k]) != wanted.end()) {
      first_wanted = std::min(first_wanted, k);
    }
  }
  for (std::size_t i = n; i-- > first_wanted;) {
    QPolynomial acc = out.det * m[i][n];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!m[i][j].is_zero()) {
        acc -= m[i][j] * y[j];
      }
    }
    y[i] = exact_quotient(acc, m[i][i]);
    out.scaled[block.unknowns[i]] = y[i];
  }
  return out;
}

} // namespace

namespace {

struct Fraction {
  QPolynomial num;
  QPolynomial den;
};

// target(values) as one fraction. The common denominator is a product of
// powers of the distinct value denominators; those powers are divided back
// out of the numerator where they divide exactly. With `reduce` a final gcd
// makes the result coprime.
GGExpression evaluate_target(const RPolynomial& target,
                             const std::unordered_map<SymbolId, Fraction>& values,
                             const OrderPtr& param_order, bool reduce) {
  std::vector<QPolynomial> factors;
  std::unordered_map<SymbolId, std::size_t> factor_of;  // absent: polynomial value
  std::unordered_map<SymbolId, QPolynomial> nums;
  for (const auto& [id, v] : values) {
    QPolynomial n = v.num;
    if (v.den.is_constant()) {
      nums[id] = n.scaled(1 / v.den.constant_term());
      continue;
    }
    std::size_t k = 0;
    for (; k < factors.size(); ++k) {
      const QPolynomial& f = factors[k];
      if (f.size() == v.den.size()) {
        Rational ratio = v.den.leading_coeff() / f.leading_coeff();
        if (f.scaled(ratio) == v.den) {
          n = n.scaled(1 / ratio);
          break;
        }
      }
    }
    if (k == factors.size()) {
      factors.push_back(v.den);
    }
    factor_of[id] = k;
    nums[id] = std::move(n);
  }

  const std::size_t nf = factors.size();
  auto exponents = [&](const Monomial& m) {
    std::vector<std::uint32_t> e(nf, 0);
    for (const auto& [id, exp] : m.entries()) {
      auto it = factor_of.find(id);
      if (it != factor_of.end()) {
        e[it->second] += exp;
      }
    }
    return e;
  };
  std::vector<std::uint32_t> top(nf, 0);
  for (const auto& t : target.terms()) {
    auto e = exponents(t.mono);
    for (std::size_t k = 0; k < nf; ++k) {
      top[k] = std::max(top[k], e[k]);
    }
  }
  QPolynomial num(param_order);
  for (const auto& t : target.terms()) {
    QPolynomial term = polynomial_coefficient(t.coeff);
    for (const auto& [id, exp] : t.mono.entries()) {
      term = term * power(nums.at(id), exp);
    }
    auto e = exponents(t.mono);
    for (std::size_t k = 0; k < nf; ++k) {
      term = term * power(factors[k], top[k] - e[k]);
    }
    num += term;
  }
  QPolynomial den = QPolynomial::constant(1, param_order);
  for (std::size_t k = 0; k < nf; ++k) {
    std::uint32_t mult = top[k];
    while (mult > 0 && !num.is_zero()) {
      auto q = divide_exact(num, factors[k]);
      if (!q) {
        break;
      }
      num = std::move(*q);
      --mult;
    }
    den = den * power(factors[k], mult);
  }
  if (num.is_zero()) {
    den = QPolynomial::constant(1, param_order);
  } else if (reduce && !den.is_constant()) {
    QPolynomial g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }
  GGExpression gg{std::move(num), std::move(den), 0};
  gg.normalize();
  return gg;
}

} // namespace

GGExpression stage1_normal_form(const PRKModel& model, const OrderPtr& order1) {
  auto ideal = build_variational_ideal(model, order1);
  // The system is linear, so any Groebner basis already exposes one pivot per
  // unknown; skipping tail reduction avoids rational-function swell.
  GroebnerOptions options;
  options.reduce_tails = false;
  options.interreduce = false;
  auto gb = buchberger(ideal, options);

  std::unordered_map<SymbolId, const RPolynomial*> pivot;
  for (const auto& g : gb.elements) {
    const Monomial& lm = g.leading_monomial();
    if (lm.is_one()) {
      throw SingularSystemError("variational system is inconsistent");
    }
    if (lm.degree() == 1) {
      pivot[lm.entries()[0].first] = &g;
    }
  }
  for (SymbolId id : model.derivative_symbols()) {
    if (!pivot.count(id)) {
      throw SingularSystemError("variational system does not determine " +
                                model.symbols()->name(id));
    }
  }

  // The quotient ring is Q(parameters) itself, so the normal form of the
  // target is its value at the unique solution. Back substitution through
  // the triangular basis yields the values the target needs, nothing more.
  std::unordered_map<SymbolId, RationalFunction> solved;
  std::function<const RationalFunction&(SymbolId)> value = [&](SymbolId id) -> const RationalFunction& {
    auto it = solved.find(id);
    if (it != solved.end()) {
      return it->second;
    }
    const RPolynomial& g = *pivot.at(id);
    RationalFunction v;
    for (const auto& t : g.terms().subspan(1)) {
      if (t.mono.is_one()) {
        v -= t.coeff;
      } else {
        v -= t.coeff * value(t.mono.entries()[0].first);
      }
    }
    v /= g.leading_coeff();
    return solved.emplace(id, std::move(v)).first->second;
  };

  RPolynomial target = build_target(model, order1);
  std::unordered_map<SymbolId, Fraction> values;
  for (const auto& t : target.terms()) {
    for (const auto& [id, e] : t.mono.entries()) {
      (void)e;
      const RationalFunction& v = value(id);
      values[id] = Fraction{v.numerator(), v.denominator()};
    }
  }
  GGExpression gg = evaluate_target(target, values, model.parameter_order(), true);
  gg.stage1_basis_size = gb.elements.size();
  return gg;
}

GGExpression linear_solve_oracle(const PRKModel& model) {
  OrderPtr order = stage1_order(model, Stage1Style::deterministic_paper);
  auto ideal = build_variational_ideal(model, order);
  RPolynomial target = build_target(model, order);
  const OrderPtr& param_order = model.parameter_order();

  std::vector<SymbolId> wanted;
  for (const auto& t : target.terms()) {
    for (const auto& [id, e] : t.mono.entries()) {
      (void)e;
      if (std::find(wanted.begin(), wanted.end(), id) == wanted.end()) {
        wanted.push_back(id);
      }
    }
  }

  auto blocks = split_blocks(ideal.generators, model.derivative_symbols());
  std::vector<BlockSolution> solutions;
  std::unordered_map<SymbolId, std::size_t> owner;
  for (auto& b : blocks) {
    bool needed = std::any_of(b.unknowns.begin(), b.unknowns.end(), [&](SymbolId id) {
      return std::find(wanted.begin(), wanted.end(), id) != wanted.end();
    });
    if (!needed) {
      continue;
    }
    for (SymbolId id : b.unknowns) {
      owner[id] = solutions.size();
    }
    solutions.push_back(solve_block(ideal.generators, std::move(b), wanted, param_order));
  }

  std::unordered_map<SymbolId, Fraction> values;
  for (SymbolId id : wanted) {
    const auto& b = solutions[owner.at(id)];
    values[id] = Fraction{b.scaled.at(id), b.det};
  }
  return evaluate_target(target, values, param_order, false);
}

namespace {

RPolynomial lift(const QPolynomial& f) {
  std::vector<Term<RationalFunction>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    terms.push_back(Term<RationalFunction>{RationalFunction(t.coeff), t.mono});
  }
  return RPolynomial::from_sorted(f.order(), std::move(terms));
}

// Terms free of h and dB, i.e. the expression at a zero step.
QPolynomial at_zero_step(const QPolynomial& f, const PRKModel& model) {
  std::vector<Term<Rational>> keep;
  for (const auto& t : f.terms()) {
    bool step = t.mono.exponent(model.h()) > 0 ||
                (model.stochastic() && t.mono.exponent(model.dB()) > 0);
    if (!step) {
      keep.push_back(t);
    }
  }
  return QPolynomial::from_sorted(f.order(), std::move(keep));
}

} // namespace

Stage2Result stage2_reduce(const GGExpression& gg, const PRKModel& model, const OrderPtr& order2,
                           const GroebnerOptions& options) {
  auto ideal = build_symplectic_ideal(model, order2);
  // The conditions have rational coefficients, so their basis over Q is also
  // a basis over Q(h, dB, H); normal forms are then taken over the latter.
  auto gb = buchberger(ideal, options);
  std::vector<RPolynomial> basis;
  for (const auto& g : gb.elements) {
    basis.push_back(lift(g));
  }

  const OrderPtr& coeff_order = model.other_parameter_order();
  Stage2Result out;
  out.ideal_size = ideal.generators.size();
  out.basis_size = gb.elements.size();
  out.stats = gb.stats;
  out.numerator_nf = normal_form(split_parameters(gg.numerator, order2, coeff_order), basis, order2);
  out.denominator_reduced =
      normal_form(split_parameters(gg.denominator, order2, coeff_order), basis, order2);
  out.denominator_nf = out.numerator_nf.is_zero()
                           ? RPolynomial::constant(RationalFunction(1), order2)
                           : out.denominator_reduced;
  out.denominator_is_one_at_zero_step = at_zero_step(gg.denominator, model).is_one();
  return out;
}

std::string_view to_string(Stage1OrderChoice c) {
  switch (c) {
  case Stage1OrderChoice::paper:
    return "paper";
  case Stage1OrderChoice::reversed:
    return "reversed";
  case Stage1OrderChoice::grevlex:
    return "grevlex";
  }
  return "?";
}

OrderPtr stage1_order(const PRKModel& model, Stage1OrderChoice choice) {
  switch (choice) {
  case Stage1OrderChoice::paper:
    return default_variable_order(model, 1);
  case Stage1OrderChoice::reversed:
    return stage1_order(model, Stage1Style::reversed);
  case Stage1OrderChoice::grevlex:
    return stage1_order(model, Stage1Style::grevlex);
  }
  throw Error("unknown stage-1 order");
}

std::string_view to_string(Verdict v) {
  return v == Verdict::symplectic_verified ? "SYMPLECTIC-VERIFIED" : "NOT-REDUCED";
}

bool ProofCertificate::same_content(const ProofCertificate& o) const {
  auto opts = [](const ProveOptions& p) {
    return std::tuple(p.order1, p.order2, p.cross_check, p.emit_gg, p.max_pairs);
  };
  return kind == o.kind && stages == o.stages &&
         identify_mixed_partials == o.identify_mixed_partials && opts(options) == opts(o.options) &&
         stage1 == o.stage1 && stage2 == o.stage2 && verdict == o.verdict && note == o.note &&
         error == o.error && input_digest == o.input_digest;
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha-256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 15];
  }
  return out;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string input_text(const PRKModel& model, const ProveOptions& options, const OrderPtr& order1,
                       const OrderPtr& order2) {
  std::string s = "kind=" + std::string(to_string(model.spec().kind)) +
                  "\nstages=" + std::to_string(model.stages()) +
                  "\nidentify_mixed_partials=" + (model.spec().identify_mixed_partials ? "1" : "0") +
                  "\norder1=" + std::string(to_string(options.order1)) +
                  "\norder2=" + std::string(to_string(options.order2)) +
                  "\nmax_pairs=" + std::to_string(options.max_pairs) + "\n";
  auto names = [&](const OrderPtr& o) {
    for (SymbolId id : o->precedence()) {
      s += model.symbols()->name(id) + " ";
    }
    s += "\n";
  };
  names(order1);
  names(order2);
  for (const auto& g : build_variational_ideal(model, order1).generators) {
    s += render_polynomial(g) + "\n";
  }
  s += render_polynomial(build_target(model, order1)) + "\n";
  for (const auto& g : build_symplectic_ideal(model, order2).generators) {
    s += render_polynomial(g) + "\n";
  }
  return s;
}

} // namespace

ProofCertificate prove(const PRKSpec& spec, const ProveOptions& options) {
  ProofCertificate cert;
  cert.kind = spec.kind;
  cert.stages = spec.stages;
  cert.identify_mixed_partials = spec.identify_mixed_partials;
  cert.options = options;

  PRKModel model(spec);
  OrderPtr order1 = stage1_order(model, options.order1);
  OrderPtr order2 = stage2_order(model, options.order2);
  cert.input_digest = sha256_hex(input_text(model, options, order1, order2));

  auto fail = [&](const std::string& what) {
    cert.verdict = Verdict::not_reduced;
    cert.error = what;
    cert.note = "no proof found by this method; this is not a disproof";
    return cert;
  };

  GGExpression gg;
  try {
    auto t0 = std::chrono::steady_clock::now();
    gg = stage1_normal_form(model, order1);
    cert.timings.stage1_ms = ms_since(t0);
  } catch (const Error& e) {
    return fail(std::string("stage 1: ") + e.what());
  }
  ProofCertificate::Stage1 s1;
  s1.equations = build_variational_ideal(model, order1).generators.size();
  s1.unknowns = model.derivative_symbols().size();
  s1.basis_size = gg.stage1_basis_size;
  s1.numerator_terms = gg.numerator.size();
  s1.denominator_terms = gg.denominator.size();
  std::string num_text = render_polynomial(gg.numerator);
  std::string den_text = render_polynomial(gg.denominator);
  s1.gg_digest = sha256_hex(num_text + "\n" + den_text + "\n");
  if (options.emit_gg) {
    s1.gg_numerator = num_text;
    s1.gg_denominator = den_text;
  }
  if (options.cross_check) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      s1.cross_check = equivalent(gg, linear_solve_oracle(model)) ? "agree" : "disagree";
    } catch (const Error& e) {
      s1.cross_check = std::string("failed: ") + e.what();
    }
    cert.timings.cross_check_ms = ms_since(t0);
  }
  cert.stage1 = s1;
  if (s1.cross_check != "agree" && s1.cross_check != "not run") {
    return fail("stage 1 cross-check: " + s1.cross_check);
  }

  Stage2Result r;
  try {
    auto t0 = std::chrono::steady_clock::now();
    GroebnerOptions go;
    go.max_pairs = options.max_pairs;
    r = stage2_reduce(gg, model, order2, go);
    cert.timings.stage2_ms = ms_since(t0);
  } catch (const BudgetExceededError& e) {
    return fail(std::string("stage 2: ") + e.what() + " after " +
                std::to_string(e.stats().pairs_processed) + " S-pairs");
  } catch (const Error& e) {
    return fail(std::string("stage 2: ") + e.what());
  }
  ProofCertificate::Stage2 s2;
  s2.ideal_size = r.ideal_size;
  s2.basis_size = r.basis_size;
  s2.numerator_nf = render_polynomial(r.numerator_nf);
  s2.denominator_nf = render_polynomial(r.denominator_nf);
  s2.denominator_reduced = render_polynomial(r.denominator_reduced);
  s2.denominator_reduced_terms = r.denominator_reduced.size();
  s2.denominator_at_zero_step = render_polynomial(at_zero_step(gg.denominator, model));
  cert.stage2 = s2;

  if (r.verified()) {
    cert.verdict = Verdict::symplectic_verified;
    cert.note = "numerator reduces to 0 modulo the symplectic conditions and the denominator "
                "is 1 at zero step, so g_G reduces to 0/1";
  } else {
    cert.verdict = Verdict::not_reduced;
    cert.note = "no proof found by this method; this is not a disproof";
  }
  return cert;
}

} // namespace symprove
