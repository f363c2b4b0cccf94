#include "symprove/prk_model.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace symprove {

namespace {

constexpr std::size_t kEntities = 6;  // p_stage, q_stage, P, Q, Pt, Qt

std::size_t entity_index(Entity e) {
  switch (e) {
  case Entity::p_stage: return 0;
  case Entity::q_stage: return 1;
  case Entity::P: return 2;
  case Entity::Q: return 3;
  case Entity::Pt: return 4;
  case Entity::Qt: return 5;
  default: return 0;
  }
}

std::string entity_name(Entity e) {
  switch (e) {
  case Entity::p_n:
  case Entity::p_stage: return "dp";
  case Entity::q_n:
  case Entity::q_stage: return "dq";
  case Entity::P: return "dP";
  case Entity::Q: return "dQ";
  case Entity::Pt: return "dPt";
  case Entity::Qt: return "dQt";
  }
  return "?";
}

std::string wrt_name(Wrt w) { return w == Wrt::p ? "dp" : "dq"; }

} // namespace

std::string_view to_string(SystemKind kind) {
  return kind == SystemKind::deterministic ? "deterministic" : "stochastic";
}

std::string_view to_string(Stage1Style style) {
  switch (style) {
  case Stage1Style::deterministic_paper: return "deterministic-paper";
  case Stage1Style::stochastic_paper: return "stochastic-paper";
  case Stage1Style::reversed: return "reversed";
  case Stage1Style::grevlex: return "grevlex";
  }
  return "?";
}

PRKModel::PRKModel(PRKSpec spec) : spec_(spec), symbols_(std::make_shared<SymbolTable>()) {
  const std::size_t s = spec_.stages;
  if (s == 0) {
    throw Error("a PRK method needs at least one stage");
  }
  const bool stoch = stochastic();
  SymbolTable& t = *symbols_;
  auto idx2 = [s](std::size_t i, std::size_t j) {
    return s < 10 ? std::to_string(i) + std::to_string(j)
                  : std::to_string(i) + "_" + std::to_string(j);
  };

  // Derivative indeterminates: 4 for the new state, then per stage.
  derivative_ids_.assign(4 + kEntities * s * 2, 0);
  for (Entity e : {Entity::p_n, Entity::q_n}) {
    for (Wrt w : {Wrt::p, Wrt::q}) {
      SymbolId id = t.add(entity_name(e) + "_n_" + wrt_name(w), SymbolKind::derivative);
      derivative_ids_[(e == Entity::p_n ? 0 : 2) + (w == Wrt::p ? 0 : 1)] = id;
      derivatives_.push_back(id);
    }
  }
  std::vector<Entity> stage_entities = {Entity::p_stage, Entity::q_stage, Entity::P, Entity::Q};
  if (stoch) {
    stage_entities.push_back(Entity::Pt);
    stage_entities.push_back(Entity::Qt);
  }
  for (Entity e : stage_entities) {
    for (std::size_t i = 1; i <= s; ++i) {
      for (Wrt w : {Wrt::p, Wrt::q}) {
        SymbolId id = t.add(entity_name(e) + "_n" + std::to_string(i) + "_" + wrt_name(w),
                            SymbolKind::derivative);
        derivative_ids_[4 + (entity_index(e) * s + (i - 1)) * 2 + (w == Wrt::p ? 0 : 1)] = id;
        derivatives_.push_back(id);
      }
    }
  }

  auto matrix = [&](const std::string& stem, std::vector<SymbolId>& into) {
    for (std::size_t i = 1; i <= s; ++i) {
      for (std::size_t j = 1; j <= s; ++j) {
        into.push_back(t.add(stem + idx2(i, j), SymbolKind::rk_coefficient));
      }
    }
    rk_.insert(rk_.end(), into.begin(), into.end());
  };
  auto vector = [&](const std::string& stem, std::vector<SymbolId>& into, SymbolKind kind) {
    for (std::size_t i = 1; i <= s; ++i) {
      into.push_back(t.add(stem + std::to_string(i), kind));
    }
  };
  matrix("a", a_);
  matrix("ah", ah_);
  vector("b", b_, SymbolKind::rk_coefficient);
  vector("bh", bh_, SymbolKind::rk_coefficient);
  rk_.insert(rk_.end(), b_.begin(), b_.end());
  rk_.insert(rk_.end(), bh_.begin(), bh_.end());
  if (stoch) {
    matrix("al", al_);
    matrix("alh", alh_);
    vector("be", be_, SymbolKind::rk_coefficient);
    vector("beh", beh_, SymbolKind::rk_coefficient);
    rk_.insert(rk_.end(), be_.begin(), be_.end());
    rk_.insert(rk_.end(), beh_.begin(), beh_.end());
  }

  h_ = t.add("h", SymbolKind::parameter);
  others_.push_back(h_);
  if (stoch) {
    db_ = t.add("dB", SymbolKind::parameter);
    others_.push_back(db_);
  }
  auto hessian = [&](const std::string& stem, std::vector<SymbolId>& pp, std::vector<SymbolId>& pq,
                     std::vector<SymbolId>& qp, std::vector<SymbolId>& qq) {
    for (std::size_t i = 1; i <= s; ++i) {
      std::string n = std::to_string(i);
      pp.push_back(t.add(stem + "pp" + n, SymbolKind::parameter));
      pq.push_back(t.add(stem + "pq" + n, SymbolKind::parameter));
      qp.push_back(spec_.identify_mixed_partials ? pq.back()
                                                 : t.add(stem + "qp" + n, SymbolKind::parameter));
      qq.push_back(t.add(stem + "qq" + n, SymbolKind::parameter));
    }
  };
  hessian("H", hpp_, hpq_, hqp_, hqq_);
  if (stoch) {
    hessian("Ht", htpp_, htpq_, htqp_, htqq_);
  }
  for (SymbolId id = 0; id < t.size(); ++id) {
    if (t.at(id).kind == SymbolKind::parameter) {
      if (id != h_ && (!stoch || id != db_)) {
        others_.push_back(id);
      }
    }
  }
  for (SymbolId id = 0; id < t.size(); ++id) {
    if (t.at(id).kind != SymbolKind::derivative) {
      params_.push_back(id);
    }
  }
  // others_ was seeded with h and dB; keep creation order throughout.
  std::sort(others_.begin(), others_.end());
  param_order_ = make_order(OrderKind::grevlex, params_, symbols_);
  other_order_ = make_order(OrderKind::grevlex, others_, symbols_);
}

SymbolId PRKModel::derivative(Entity e, std::size_t i, Wrt w) const {
  std::size_t wi = w == Wrt::p ? 0 : 1;
  if (e == Entity::p_n) {
    return derivative_ids_[wi];
  }
  if (e == Entity::q_n) {
    return derivative_ids_[2 + wi];
  }
  if ((e == Entity::Pt || e == Entity::Qt) && !stochastic()) {
    throw Error("noise stage values exist only in the stochastic model");
  }
  if (i == 0 || i > spec_.stages) {
    throw Error("stage index " + std::to_string(i) + " out of range");
  }
  return derivative_ids_[4 + (entity_index(e) * spec_.stages + (i - 1)) * 2 + wi];
}

SymbolId PRKModel::mat(const std::vector<SymbolId>& m, std::size_t i, std::size_t j) const {
  if (m.empty()) {
    throw Error("coefficient exists only in the stochastic model");
  }
  if (i == 0 || j == 0 || i > spec_.stages || j > spec_.stages) {
    throw Error("tableau index out of range");
  }
  return m[(i - 1) * spec_.stages + (j - 1)];
}

SymbolId PRKModel::vec(const std::vector<SymbolId>& v, std::size_t i) const {
  if (v.empty()) {
    throw Error("symbol exists only in the stochastic model");
  }
  if (i == 0 || i > spec_.stages) {
    throw Error("stage index out of range");
  }
  return v[i - 1];
}

SymbolId PRKModel::dB() const {
  if (!stochastic()) {
    throw Error("dB exists only in the stochastic model");
  }
  return db_;
}

namespace {

// Linear form sum c_k * x_k + c_0 with Q[parameters] coefficients.
class LinearBuilder {
public:
  LinearBuilder(const PRKModel& model, OrderPtr order) : model_(model), order_(std::move(order)) {}

  QPolynomial param(SymbolId id) const { return QPolynomial::variable(id, model_.parameter_order()); }
  QPolynomial one() const { return QPolynomial::constant(1, model_.parameter_order()); }

  void add(const QPolynomial& coeff, SymbolId var) {
    terms_.push_back(Term<RationalFunction>{RationalFunction(coeff), Monomial::variable(var)});
  }
  void add_constant(const QPolynomial& c) {
    terms_.push_back(Term<RationalFunction>{RationalFunction(c), Monomial{}});
  }

  RPolynomial finish() {
    RPolynomial out(order_, std::move(terms_));
    terms_.clear();
    return out;
  }

private:
  const PRKModel& model_;
  OrderPtr order_;
  std::vector<Term<RationalFunction>> terms_;
};

} // namespace

IdealSpec<RationalFunction> build_variational_ideal(const PRKModel& model, const OrderPtr& order) {
  const std::size_t s = model.stages();
  LinearBuilder lb(model, order);
  const QPolynomial h = lb.param(model.h());
  const QPolynomial one = lb.one();
  IdealSpec<RationalFunction> spec;
  spec.order = order;
  auto d = [&model](Entity e, std::size_t i, Wrt w) { return model.derivative(e, i, w); };

  if (!model.stochastic()) {
    for (Wrt w : {Wrt::p, Wrt::q}) {
      // dp_n = [1] + h sum b_i dp_i
      lb.add(one, d(Entity::p_n, 0, w));
      for (std::size_t i = 1; i <= s; ++i) {
        lb.add(-(h * lb.param(model.b(i))), d(Entity::p_stage, i, w));
      }
      if (w == Wrt::p) {
        lb.add_constant(-one);
      }
      spec.generators.push_back(lb.finish());
    }
    for (Wrt w : {Wrt::p, Wrt::q}) {
      lb.add(one, d(Entity::q_n, 0, w));
      for (std::size_t i = 1; i <= s; ++i) {
        lb.add(-(h * lb.param(model.bh(i))), d(Entity::q_stage, i, w));
      }
      if (w == Wrt::q) {
        lb.add_constant(-one);
      }
      spec.generators.push_back(lb.finish());
    }
    for (std::size_t i = 1; i <= s; ++i) {
      for (Wrt w : {Wrt::p, Wrt::q}) {
        // dp_i = -Hqp_i dP_i - Hqq_i dQ_i
        lb.add(one, d(Entity::p_stage, i, w));
        lb.add(lb.param(model.Hqp(i)), d(Entity::P, i, w));
        lb.add(lb.param(model.Hqq(i)), d(Entity::Q, i, w));
        spec.generators.push_back(lb.finish());
      }
    }
    for (std::size_t i = 1; i <= s; ++i) {
      for (Wrt w : {Wrt::p, Wrt::q}) {
        // dq_i = Hpp_i dP_i + Hpq_i dQ_i
        lb.add(one, d(Entity::q_stage, i, w));
        lb.add(-lb.param(model.Hpp(i)), d(Entity::P, i, w));
        lb.add(-lb.param(model.Hpq(i)), d(Entity::Q, i, w));
        spec.generators.push_back(lb.finish());
      }
    }
    for (std::size_t i = 1; i <= s; ++i) {
      for (Wrt w : {Wrt::p, Wrt::q}) {
        // dP_i = [1] + h sum_j a_ij dp_j
        lb.add(one, d(Entity::P, i, w));
        for (std::size_t j = 1; j <= s; ++j) {
          lb.add(-(h * lb.param(model.a(i, j))), d(Entity::p_stage, j, w));
        }
        if (w == Wrt::p) {
          lb.add_constant(-one);
        }
        spec.generators.push_back(lb.finish());
      }
    }
    for (std::size_t i = 1; i <= s; ++i) {
      for (Wrt w : {Wrt::p, Wrt::q}) {
        lb.add(one, d(Entity::Q, i, w));
        for (std::size_t j = 1; j <= s; ++j) {
          lb.add(-(h * lb.param(model.ah(i, j))), d(Entity::q_stage, j, w));
        }
        if (w == Wrt::q) {
          lb.add_constant(-one);
        }
        spec.generators.push_back(lb.finish());
      }
    }
    return spec;
  }

  const QPolynomial dB = lb.param(model.dB());
  for (Wrt w : {Wrt::p, Wrt::q}) {
    // dp_n = [1] - h sum b_i dP_i - dB sum be_i dPt_i
    lb.add(one, d(Entity::p_n, 0, w));
    for (std::size_t i = 1; i <= s; ++i) {
      lb.add(h * lb.param(model.b(i)), d(Entity::P, i, w));
      lb.add(dB * lb.param(model.be(i)), d(Entity::Pt, i, w));
    }
    if (w == Wrt::p) {
      lb.add_constant(-one);
    }
    spec.generators.push_back(lb.finish());
  }
  for (Wrt w : {Wrt::p, Wrt::q}) {
    // dq_n = [1] + h sum bh_i dQ_i + dB sum beh_i dQt_i
    lb.add(one, d(Entity::q_n, 0, w));
    for (std::size_t i = 1; i <= s; ++i) {
      lb.add(-(h * lb.param(model.bh(i))), d(Entity::Q, i, w));
      lb.add(-(dB * lb.param(model.beh(i))), d(Entity::Qt, i, w));
    }
    if (w == Wrt::q) {
      lb.add_constant(-one);
    }
    spec.generators.push_back(lb.finish());
  }
  for (std::size_t i = 1; i <= s; ++i) {
    for (Wrt w : {Wrt::p, Wrt::q}) {
      // dp_i = [1] - h sum_j a_ij dP_j - dB sum_j al_ij dPt_j
      lb.add(one, d(Entity::p_stage, i, w));
      for (std::size_t j = 1; j <= s; ++j) {
        lb.add(h * lb.param(model.a(i, j)), d(Entity::P, j, w));
        lb.add(dB * lb.param(model.al(i, j)), d(Entity::Pt, j, w));
      }
      if (w == Wrt::p) {
        lb.add_constant(-one);
      }
      spec.generators.push_back(lb.finish());
    }
  }
  for (std::size_t i = 1; i <= s; ++i) {
    for (Wrt w : {Wrt::p, Wrt::q}) {
      // dq_i = [1] + h sum_j ah_ij dQ_j + dB sum_j alh_ij dQt_j
      lb.add(one, d(Entity::q_stage, i, w));
      for (std::size_t j = 1; j <= s; ++j) {
        lb.add(-(h * lb.param(model.ah(i, j))), d(Entity::Q, j, w));
        lb.add(-(dB * lb.param(model.alh(i, j))), d(Entity::Qt, j, w));
      }
      if (w == Wrt::q) {
        lb.add_constant(-one);
      }
      spec.generators.push_back(lb.finish());
    }
  }
  struct Row {
    Entity e;
    SymbolId (PRKModel::*first)(std::size_t) const;   // coefficient of dp_i
    SymbolId (PRKModel::*second)(std::size_t) const;  // coefficient of dq_i
  };
  // P = H_q, Pt = Ht_q, Q = H_p, Qt = Ht_p evaluated at the stage values.
  const Row rows[] = {
      {Entity::P, &PRKModel::Hqp, &PRKModel::Hqq},
      {Entity::Pt, &PRKModel::Htqp, &PRKModel::Htqq},
      {Entity::Q, &PRKModel::Hpp, &PRKModel::Hpq},
      {Entity::Qt, &PRKModel::Htpp, &PRKModel::Htpq},
  };
  for (const Row& row : rows) {
    for (std::size_t i = 1; i <= s; ++i) {
      for (Wrt w : {Wrt::p, Wrt::q}) {
        lb.add(one, d(row.e, i, w));
        lb.add(-lb.param((model.*row.first)(i)), d(Entity::p_stage, i, w));
        lb.add(-lb.param((model.*row.second)(i)), d(Entity::q_stage, i, w));
        spec.generators.push_back(lb.finish());
      }
    }
  }
  return spec;
}

RPolynomial build_target(const PRKModel& model, const OrderPtr& order) {
  auto var = [&](Entity e, Wrt w) {
    return RPolynomial::variable(model.derivative(e, 0, w), order);
  };
  RPolynomial one = RPolynomial::constant(RationalFunction(1), order);
  return -(var(Entity::q_n, Wrt::q) * var(Entity::p_n, Wrt::p)) +
         var(Entity::p_n, Wrt::q) * var(Entity::q_n, Wrt::p) + one;
}

IdealSpec<Rational> build_symplectic_ideal(const PRKModel& model, const OrderPtr& order) {
  const std::size_t s = model.stages();
  IdealSpec<Rational> spec;
  spec.order = order;
  auto v = [&order](SymbolId id) { return QPolynomial::variable(id, order); };
  if (!model.stochastic()) {
    for (std::size_t i = 1; i <= s; ++i) {
      spec.generators.push_back(v(model.b(i)) - v(model.bh(i)));
    }
    for (std::size_t i = 1; i <= s; ++i) {
      for (std::size_t j = 1; j <= s; ++j) {
        spec.generators.push_back(v(model.b(i)) * v(model.ah(i, j)) +
                                  v(model.bh(j)) * v(model.a(j, i)) -
                                  v(model.b(i)) * v(model.bh(j)));
      }
    }
    return spec;
  }
  // x_i y_j - x_i m_ij - y_j n_ji for the four (weight, matrix) combinations.
  struct Family {
    SymbolId (PRKModel::*x)(std::size_t) const;
    SymbolId (PRKModel::*y)(std::size_t) const;
    SymbolId (PRKModel::*m)(std::size_t, std::size_t) const;
    SymbolId (PRKModel::*n)(std::size_t, std::size_t) const;
  };
  const Family families[] = {
      {&PRKModel::b, &PRKModel::bh, &PRKModel::ah, &PRKModel::a},
      {&PRKModel::be, &PRKModel::bh, &PRKModel::ah, &PRKModel::al},
      {&PRKModel::b, &PRKModel::beh, &PRKModel::alh, &PRKModel::a},
      {&PRKModel::be, &PRKModel::beh, &PRKModel::alh, &PRKModel::al},
  };
  for (const Family& f : families) {
    for (std::size_t i = 1; i <= s; ++i) {
      for (std::size_t j = 1; j <= s; ++j) {
        QPolynomial xi = v((model.*f.x)(i));
        QPolynomial yj = v((model.*f.y)(j));
        spec.generators.push_back(xi * yj - xi * v((model.*f.m)(i, j)) -
                                  yj * v((model.*f.n)(j, i)));
      }
    }
  }
  for (std::size_t i = 1; i <= s; ++i) {
    spec.generators.push_back(v(model.b(i)) - v(model.bh(i)));
  }
  for (std::size_t i = 1; i <= s; ++i) {
    spec.generators.push_back(v(model.be(i)) - v(model.beh(i)));
  }
  return spec;
}

namespace {

std::vector<SymbolId> stage_block(const PRKModel& model, Entity e, bool descending) {
  std::vector<SymbolId> out;
  const std::size_t s = model.stages();
  for (Wrt w : {Wrt::p, Wrt::q}) {
    for (std::size_t k = 0; k < s; ++k) {
      std::size_t i = descending ? s - k : k + 1;
      out.push_back(model.derivative(e, i, w));
    }
  }
  return out;
}

std::vector<SymbolId> new_state_block(const PRKModel& model) {
  return {model.derivative(Entity::p_n, 0, Wrt::p), model.derivative(Entity::p_n, 0, Wrt::q),
          model.derivative(Entity::q_n, 0, Wrt::p), model.derivative(Entity::q_n, 0, Wrt::q)};
}

void append(std::vector<SymbolId>& out, const std::vector<SymbolId>& block) {
  out.insert(out.end(), block.begin(), block.end());
}

std::vector<SymbolId> deterministic_pattern(const PRKModel& model) {
  std::vector<SymbolId> out = new_state_block(model);
  append(out, stage_block(model, Entity::P, true));
  append(out, stage_block(model, Entity::Q, true));
  if (model.stochastic()) {
    append(out, stage_block(model, Entity::Pt, true));
    append(out, stage_block(model, Entity::Qt, true));
  }
  append(out, stage_block(model, Entity::p_stage, true));
  append(out, stage_block(model, Entity::q_stage, true));
  return out;
}

std::vector<SymbolId> stochastic_pattern(const PRKModel& model) {
  std::vector<SymbolId> out = stage_block(model, Entity::p_stage, true);
  append(out, stage_block(model, Entity::q_stage, true));
  append(out, stage_block(model, Entity::P, false));
  append(out, stage_block(model, Entity::Q, false));
  if (model.stochastic()) {
    append(out, stage_block(model, Entity::Pt, false));
    append(out, stage_block(model, Entity::Qt, false));
  }
  append(out, new_state_block(model));
  return out;
}

} // namespace

OrderPtr stage1_order(const PRKModel& model, Stage1Style style) {
  switch (style) {
  case Stage1Style::deterministic_paper:
    return make_order(OrderKind::lex, deterministic_pattern(model), model.symbols());
  case Stage1Style::stochastic_paper:
    return make_order(OrderKind::lex, stochastic_pattern(model), model.symbols());
  case Stage1Style::reversed: {
    auto p = deterministic_pattern(model);
    std::reverse(p.begin(), p.end());
    return make_order(OrderKind::lex, std::move(p), model.symbols());
  }
  case Stage1Style::grevlex:
    return make_order(OrderKind::grevlex, deterministic_pattern(model), model.symbols());
  }
  throw Error("unknown stage-1 order style");
}

OrderPtr stage2_order(const PRKModel& model, OrderKind kind) {
  const std::size_t s = model.stages();
  std::vector<SymbolId> prec;
  if (!model.stochastic()) {
    for (std::size_t i = s; i >= 1; --i) prec.push_back(model.bh(i));
    for (std::size_t i = s; i >= 1; --i) prec.push_back(model.b(i));
    for (std::size_t i = s; i >= 1; --i)
      for (std::size_t j = s; j >= 1; --j) prec.push_back(model.ah(i, j));
    for (std::size_t i = s; i >= 1; --i)
      for (std::size_t j = s; j >= 1; --j) prec.push_back(model.a(i, j));
  } else {
    for (std::size_t i = s; i >= 1; --i) {
      prec.push_back(model.be(i));
      prec.push_back(model.b(i));
    }
    for (std::size_t i = s; i >= 1; --i) {
      prec.push_back(model.beh(i));
      prec.push_back(model.bh(i));
    }
    for (std::size_t i = s; i >= 1; --i) {
      for (std::size_t j = s; j >= 1; --j) {
        prec.push_back(model.al(i, j));
        prec.push_back(model.a(i, j));
      }
    }
    for (std::size_t i = s; i >= 1; --i) {
      for (std::size_t j = s; j >= 1; --j) {
        prec.push_back(model.alh(i, j));
        prec.push_back(model.ah(i, j));
      }
    }
  }
  return make_order(kind, std::move(prec), model.symbols());
}

OrderPtr default_variable_order(const PRKModel& model, int stage) {
  if (stage == 1) {
    return stage1_order(model, model.stochastic() ? Stage1Style::stochastic_paper
                                                  : Stage1Style::deterministic_paper);
  }
  if (stage == 2) {
    return stage2_order(model, OrderKind::lex);
  }
  throw Error("stage must be 1 or 2");
}

CoefficientSet random_symplectic_coefficients(const PRKSpec& spec, std::uint64_t seed) {
  const std::size_t s = spec.stages;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  auto any = [&]() {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  auto nonzero = [&]() {
    Rational r;
    do {
      r = any();
    } while (sgn(r) == 0);
    return r;
  };
  auto square = [s]() { return std::vector<std::vector<Rational>>(s, std::vector<Rational>(s)); };
  CoefficientSet c;
  c.stages = s;
  c.a = square();
  c.ah = square();
  for (std::size_t i = 0; i < s; ++i) {
    c.b.push_back(nonzero());
  }
  c.bh = c.b;
  for (auto& row : c.ah) {
    for (auto& x : row) {
      x = any();
    }
  }
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      c.a[j][i] = c.b[i] * (c.b[j] - c.ah[i][j]) / c.b[j];
    }
  }
  if (spec.kind == SystemKind::stochastic) {
    c.al = square();
    c.alh = square();
    for (std::size_t i = 0; i < s; ++i) {
      c.be.push_back(nonzero());
    }
    c.beh = c.be;
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        c.al[j][i] = c.be[i] * (c.b[j] - c.ah[i][j]) / c.b[j];
        c.alh[i][j] = c.beh[j] * (c.b[i] - c.a[j][i]) / c.b[i];
      }
    }
  }
  return c;
}

Assignment coefficient_assignment(const PRKModel& model, const CoefficientSet& c) {
  const std::size_t s = model.stages();
  if (c.stages != s) {
    throw Error("coefficient set has " + std::to_string(c.stages) + " stages, model has " +
                std::to_string(s));
  }
  Assignment out;
  for (std::size_t i = 1; i <= s; ++i) {
    out[model.b(i)] = c.b[i - 1];
    out[model.bh(i)] = c.bh[i - 1];
    for (std::size_t j = 1; j <= s; ++j) {
      out[model.a(i, j)] = c.a[i - 1][j - 1];
      out[model.ah(i, j)] = c.ah[i - 1][j - 1];
    }
    if (model.stochastic()) {
      out[model.be(i)] = c.be[i - 1];
      out[model.beh(i)] = c.beh[i - 1];
      for (std::size_t j = 1; j <= s; ++j) {
        out[model.al(i, j)] = c.al[i - 1][j - 1];
        out[model.alh(i, j)] = c.alh[i - 1][j - 1];
      }
    }
  }
  return out;
}

CoefficientSet coefficients_from_pairs(const PRKModel& model,
                                       const std::vector<std::pair<std::string, Rational>>& pairs) {
  const std::size_t s = model.stages();
  const SymbolTable& table = *model.symbols();
  std::map<SymbolId, Rational> values;
  for (const auto& [name, value] : pairs) {
    auto id = table.find(name);
    if (!id || table.at(*id).kind != SymbolKind::rk_coefficient) {
      throw Error("unknown coefficient '" + name + "' for a " +
                  std::string(to_string(model.spec().kind)) + " method with " +
                  std::to_string(s) + " stages");
    }
    values[*id] = value;
  }
  auto get = [&](SymbolId id) {
    auto it = values.find(id);
    if (it == values.end()) {
      throw Error("missing coefficient '" + table.name(id) + "'");
    }
    return it->second;
  };
  auto square = [s]() { return std::vector<std::vector<Rational>>(s, std::vector<Rational>(s)); };
  CoefficientSet c;
  c.stages = s;
  c.a = square();
  c.ah = square();
  if (model.stochastic()) {
    c.al = square();
    c.alh = square();
  }
  for (std::size_t i = 1; i <= s; ++i) {
    c.b.push_back(get(model.b(i)));
    c.bh.push_back(get(model.bh(i)));
    if (model.stochastic()) {
      c.be.push_back(get(model.be(i)));
      c.beh.push_back(get(model.beh(i)));
    }
    for (std::size_t j = 1; j <= s; ++j) {
      c.a[i - 1][j - 1] = get(model.a(i, j));
      c.ah[i - 1][j - 1] = get(model.ah(i, j));
      if (model.stochastic()) {
        c.al[i - 1][j - 1] = get(model.al(i, j));
        c.alh[i - 1][j - 1] = get(model.alh(i, j));
      }
    }
  }
  return c;
}

} // namespace symprove
