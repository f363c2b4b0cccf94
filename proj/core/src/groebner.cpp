#include "symprove/groebner.hpp"

#include <algorithm>
#include <iterator>
#include <optional>

namespace symprove {

namespace {

std::size_t weight(const Rational&) { return 1; }
std::size_t weight(const RationalFunction& c) {
  return c.numerator().size() + c.denominator().size();
}

template <class K>
std::vector<Polynomial<K>> in_order(const std::vector<Polynomial<K>>& polys, const OrderPtr& order) {
  std::vector<Polynomial<K>> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    out.push_back(same_order(p.order(), order) ? p : p.with_order(order));
  }
  return out;
}

template <class K>
const Polynomial<K>* find_reducer(const Monomial& m, const std::vector<const Polynomial<K>*>& basis,
                                  ReducerSelection selection) {
  const Polynomial<K>* found = nullptr;
  for (const auto* g : basis) {
    if (g->leading_monomial().divides(m)) {
      found = g;
      if (selection == ReducerSelection::first) {
        break;
      }
    }
  }
  return found;
}

template <class K>
Polynomial<K> reduce(const Polynomial<K>& p, const std::vector<const Polynomial<K>*>& basis,
                     ReducerSelection selection, bool top_only = false) {
  OrderPtr order = p.order();
  for (const auto* g : basis) {
    if (!order) {
      order = g->order();
    }
  }
  const MonomialOrder* ord = order.get();
  std::vector<Term<K>> cur(p.terms().begin(), p.terms().end());
  std::vector<Term<K>> next;
  std::vector<Term<K>> remainder;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const Term<K>& lt = cur[pos];
    const Polynomial<K>* g = find_reducer(lt.mono, basis, selection);
    if (g == nullptr) {
      if (top_only) {
        std::move(cur.begin() + static_cast<std::ptrdiff_t>(pos), cur.end(),
                  std::back_inserter(remainder));
        break;
      }
      remainder.push_back(std::move(cur[pos]));
      ++pos;
      continue;
    }
    const K& glc = g->leading_coeff();
    const K c = is_one(glc) ? lt.coeff : K(lt.coeff / glc);
    const Monomial m = lt.mono.quotient(g->leading_monomial());
    // cur[pos+1..] - c*m*tail(g); the leading terms cancel by construction.
    auto gt = g->terms();
    next.clear();
    next.reserve(cur.size() - pos + gt.size());
    std::size_t i = pos + 1;
    std::size_t j = 1;
    while (i < cur.size() || j < gt.size()) {
      Monomial gm;
      int s = 0;
      if (j < gt.size()) {
        gm = gt[j].mono * m;
      }
      if (i == cur.size()) {
        s = -1;
      } else if (j == gt.size()) {
        s = 1;
      } else {
        auto o = ord->compare(cur[i].mono, gm);
        s = o > 0 ? 1 : (o < 0 ? -1 : 0);
      }
      if (s > 0) {
        next.push_back(std::move(cur[i++]));
      } else if (s < 0) {
        next.push_back(Term<K>{K(-(gt[j].coeff * c)), std::move(gm)});
        ++j;
      } else {
        K v = cur[i].coeff - gt[j].coeff * c;
        if (!is_zero(v)) {
          next.push_back(Term<K>{std::move(v), std::move(cur[i].mono)});
        }
        ++i;
        ++j;
      }
    }
    std::swap(cur, next);
    pos = 0;
  }
  return Polynomial<K>::from_sorted(order, std::move(remainder));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t degree;
  std::size_t seq;
};

template <class K>
class Buchberger {
public:
  Buchberger(const IdealSpec<K>& spec, const GroebnerOptions& options)
      : order_(spec.order), options_(options) {
    for (const auto& g : in_order(spec.generators, order_)) {
      if (!g.is_zero()) {
        inputs_.push_back(g.monic());
      }
    }
    if (inputs_.empty()) {
      throw Error("ideal has no nonzero generator");
    }
  }

  GroebnerBasis<K> run() {
    // Highest leading monomial first, simplest leading coefficient among
    // equals. On linear systems this is top-down elimination with a cheap
    // pivot; any order gives the same reduced basis.
    std::stable_sort(inputs_.begin(), inputs_.end(),
                     [this](const Polynomial<K>& x, const Polynomial<K>& y) {
                       auto c = order_->compare(x.leading_monomial(), y.leading_monomial());
                       if (c != 0) {
                         return c > 0;
                       }
                       auto wx = weight(x.leading_coeff());
                       auto wy = weight(y.leading_coeff());
                       return wx < wy || (wx == wy && x.size() < y.size());
                     });
    for (const auto& g : inputs_) {
      // Reduce each input by what is already present so that duplicates and
      // multiples never enter the basis.
      Polynomial<K> h = reduce(g, active_basis(), ReducerSelection::first, !options_.reduce_tails);
      if (!h.is_zero()) {
        insert(h.monic());
      }
    }
    while (auto pair = select()) {
      if (stats_.pairs_processed >= options_.max_pairs) {
        throw BudgetExceededError("S-pair budget of " + std::to_string(options_.max_pairs) +
                                      " exhausted after " + std::to_string(stats_.pairs_processed) +
                                      " pairs",
                                  stats_);
      }
      ++stats_.pairs_processed;
      Polynomial<K> s = s_polynomial(polys_[pair->i], polys_[pair->j], order_);
      Polynomial<K> h = reduce(s, active_basis(), ReducerSelection::first, !options_.reduce_tails);
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(h.monic());
    }
    GroebnerBasis<K> out;
    out.order = order_;
    if (options_.interreduce) {
      out.elements = reduced_basis();
      out.reduced = true;
    } else {
      for (const auto* g : active_basis()) {
        out.elements.push_back(*g);
      }
      sort_descending(out.elements);
    }
    out.stats = stats_;
    return out;
  }

private:
  std::vector<const Polynomial<K>*> active_basis() const {
    std::vector<const Polynomial<K>*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) {
        out.push_back(&polys_[k]);
      }
    }
    return out;
  }

  std::optional<Pair> select() {
    if (pairs_.empty()) {
      return std::nullopt;
    }
    auto best = pairs_.begin();
    if (options_.selection == PairSelection::normal) {
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
        if (it->degree < best->degree || (it->degree == best->degree && it->seq < best->seq)) {
          best = it;
        }
      }
    } else {
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
        if (it->seq < best->seq) {
          best = it;
        }
      }
    }
    Pair p = *best;
    pairs_.erase(best);
    return p;
  }

  Pair make_pair(std::size_t i, std::size_t j) {
    Monomial l = Monomial::lcm(polys_[i].leading_monomial(), polys_[j].leading_monomial());
    std::uint32_t d = l.degree();
    ++stats_.pairs_created;
    return Pair{i, j, std::move(l), d, next_seq_++};
  }

  // Gebauer-Moller installation of a new element.
  void insert(Polynomial<K> h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    const Monomial& lh = polys_[hi].leading_monomial();

    std::vector<Pair> fresh;
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k]) {
        fresh.push_back(make_pair(k, hi));
      }
    }
    if (!options_.criteria) {
      for (auto& p : fresh) {
        pairs_.push_back(std::move(p));
      }
      stats_.basis_peak = std::max(stats_.basis_peak, polys_.size());
      return;
    }

    // Chain criterion among the new pairs: drop (g, h) when some other new
    // pair has an lcm properly dividing lcm(g, h). Coprime pairs are kept at
    // this step so they can still eliminate others.
    std::vector<char> keep(fresh.size(), 1);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Monomial& la = fresh[a].lcm;
      bool coprime = polys_[fresh[a].i].leading_monomial().coprime(lh);
      if (coprime) {
        continue;
      }
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) {
          continue;
        }
        const Monomial& lb = fresh[b].lcm;
        if (lb.divides(la) && (!(lb == la) || b < a)) {
          keep[a] = 0;
          break;
        }
      }
    }
    std::vector<Pair> accepted;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) {
        ++stats_.pairs_pruned;
        continue;
      }
      if (polys_[fresh[a].i].leading_monomial().coprime(lh)) {
        // Product criterion.
        ++stats_.pairs_pruned;
        continue;
      }
      accepted.push_back(std::move(fresh[a]));
    }

    // Old pairs made redundant by h.
    std::vector<Pair> retained;
    retained.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm)) {
        Monomial l1 = Monomial::lcm(polys_[p.i].leading_monomial(), lh);
        Monomial l2 = Monomial::lcm(polys_[p.j].leading_monomial(), lh);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) {
          ++stats_.pairs_pruned;
          continue;
        }
      }
      retained.push_back(std::move(p));
    }
    pairs_ = std::move(retained);
    for (auto& p : accepted) {
      pairs_.push_back(std::move(p));
    }

    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k] && lh.divides(polys_[k].leading_monomial())) {
        active_[k] = false;
      }
    }
    std::size_t live = static_cast<std::size_t>(std::count(active_.begin(), active_.end(), true));
    stats_.basis_peak = std::max(stats_.basis_peak, live);
  }

  std::vector<Polynomial<K>> reduced_basis() const {
    std::vector<const Polynomial<K>*> candidates = active_basis();
    // Minimal basis: drop elements whose leading monomial is divisible by
    // another one (the earlier element wins on equal leading monomials).
    std::vector<const Polynomial<K>*> minimal;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Monomial& la = candidates[a]->leading_monomial();
      bool redundant = false;
      for (std::size_t b = 0; b < candidates.size() && !redundant; ++b) {
        if (a == b) {
          continue;
        }
        const Monomial& lb = candidates[b]->leading_monomial();
        redundant = lb.divides(la) && (!(lb == la) || b < a);
      }
      if (!redundant) {
        minimal.push_back(candidates[a]);
      }
    }
    std::vector<Polynomial<K>> out;
    out.reserve(minimal.size());
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<const Polynomial<K>*> others;
      for (std::size_t b = 0; b < minimal.size(); ++b) {
        if (a != b) {
          others.push_back(minimal[b]);
        }
      }
      // The leading term is irreducible by the others; reduce the tail only.
      const Polynomial<K>& g = *minimal[a];
      std::vector<Term<K>> tail(g.terms().begin() + 1, g.terms().end());
      Polynomial<K> rest = reduce(Polynomial<K>::from_sorted(order_, std::move(tail)), others,
                                  ReducerSelection::first);
      out.push_back((Polynomial<K>::term(g.leading_coeff(), g.leading_monomial(), order_) + rest)
                        .monic());
    }
    sort_descending(out);
    return out;
  }

  void sort_descending(std::vector<Polynomial<K>>& polys) const {
    std::sort(polys.begin(), polys.end(), [this](const Polynomial<K>& x, const Polynomial<K>& y) {
      return order_->compare(x.leading_monomial(), y.leading_monomial()) > 0;
    });
  }

  OrderPtr order_;
  GroebnerOptions options_;
  std::vector<Polynomial<K>> inputs_;
  std::vector<Polynomial<K>> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::size_t next_seq_ = 0;
  GroebnerStats stats_;
};

} // namespace

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis,
                          const OrderPtr& order, ReducerSelection selection) {
  std::vector<Polynomial<K>> sorted = in_order(basis, order);
  std::vector<const Polynomial<K>*> ptrs;
  for (const auto& g : sorted) {
    if (!g.is_zero()) {
      ptrs.push_back(&g);
    }
  }
  Polynomial<K> start = same_order(f.order(), order) ? f : f.with_order(order);
  if (!start.order() && order) {
    start = Polynomial<K>(order, std::vector<Term<K>>(start.terms().begin(), start.terms().end()));
  }
  return reduce(start, ptrs, selection);
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g, const OrderPtr& order) {
  if (f.is_zero() || g.is_zero()) {
    throw ArithmeticError("S-polynomial of the zero polynomial");
  }
  Polynomial<K> a = same_order(f.order(), order) ? f : f.with_order(order);
  Polynomial<K> b = same_order(g.order(), order) ? g : g.with_order(order);
  const Monomial l = Monomial::lcm(a.leading_monomial(), b.leading_monomial());
  // (l / LT(a)) * a - (l / LT(b)) * b
  Polynomial<K> left = a.scaled(K(K(1) / a.leading_coeff()), l.quotient(a.leading_monomial()));
  return left.minus_multiple(K(K(1) / b.leading_coeff()), l.quotient(b.leading_monomial()), b);
}

template <class K>
GroebnerBasis<K> buchberger(const IdealSpec<K>& spec, const GroebnerOptions& options) {
  if (!spec.order) {
    throw Error("ideal specification needs a monomial order");
  }
  Buchberger<K> engine(spec, options);
  return engine.run();
}

template <class K>
bool ideal_member(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
  return normal_form(f, gb.elements, gb.order).is_zero();
}

template <class K>
bool s_pair_closed(const std::vector<Polynomial<K>>& basis, const OrderPtr& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

template <class K>
bool contains_generators(const GroebnerBasis<K>& gb, const std::vector<Polynomial<K>>& generators) {
  return std::all_of(generators.begin(), generators.end(),
                     [&gb](const Polynomial<K>& g) { return ideal_member(g, gb); });
}

template <class K>
bool is_reduced(const std::vector<Polynomial<K>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero() || !is_one(basis[i].leading_coeff())) {
      return false;
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) {
        continue;
      }
      const Monomial& lj = basis[j].leading_monomial();
      for (const auto& t : basis[i].terms()) {
        if (lj.divides(t.mono)) {
          return false;
        }
      }
    }
  }
  return true;
}

#define SYMPROVE_GROEBNER_INSTANTIATE(K)                                                         \
  template Polynomial<K> normal_form(const Polynomial<K>&, const std::vector<Polynomial<K>>&,    \
                                     const OrderPtr&, ReducerSelection);                         \
  template Polynomial<K> s_polynomial(const Polynomial<K>&, const Polynomial<K>&,                \
                                      const OrderPtr&);                                          \
  template GroebnerBasis<K> buchberger(const IdealSpec<K>&, const GroebnerOptions&);             \
  template bool ideal_member(const Polynomial<K>&, const GroebnerBasis<K>&);                     \
  template bool s_pair_closed(const std::vector<Polynomial<K>>&, const OrderPtr&);               \
  template bool contains_generators(const GroebnerBasis<K>&, const std::vector<Polynomial<K>>&); \
  template bool is_reduced(const std::vector<Polynomial<K>>&);

SYMPROVE_GROEBNER_INSTANTIATE(Rational)
SYMPROVE_GROEBNER_INSTANTIATE(RationalFunction)

} // namespace symprove
