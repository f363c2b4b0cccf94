#include "symprove/monomial.hpp"

#include "symprove/error.hpp"

#include <algorithm>
#include <limits>

namespace symprove {

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (const auto& [id, exp] : entries) {
    if (exp == 0) {
      continue;
    }
    if (!entries_.empty() && entries_.back().first == id) {
      entries_.back().second += exp;
    } else {
      entries_.emplace_back(id, exp);
    }
    degree_ += exp;
  }
}

Monomial Monomial::variable(SymbolId id, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.entries_.emplace_back(id, exponent);
    m.degree_ = exponent;
  }
  return m;
}

std::uint32_t Monomial::exponent(SymbolId id) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                             [](const Entry& e, SymbolId v) { return e.first < v; });
  return (it != entries_.end() && it->first == id) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_ || entries_.size() > other.entries_.size()) {
    return false;
  }
  auto it = other.entries_.begin();
  for (const auto& [id, exp] : entries_) {
    while (it != other.entries_.end() && it->first < id) {
      ++it;
    }
    if (it == other.entries_.end() || it->first != id || it->second < exp) {
      return false;
    }
    ++it;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first == b->first) {
      return false;
    }
    if (a->first < b->first) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  out.entries_.reserve(entries_.size());
  auto d = divisor.entries_.begin();
  for (const auto& [id, exp] : entries_) {
    std::uint32_t sub = 0;
    if (d != divisor.entries_.end() && d->first == id) {
      sub = d->second;
      ++d;
    }
    if (sub > exp) {
      throw ArithmeticError("monomial quotient is not exact");
    }
    if (exp > sub) {
      out.entries_.emplace_back(id, exp - sub);
      out.degree_ += exp - sub;
    }
  }
  if (d != divisor.entries_.end()) {
    throw ArithmeticError("monomial quotient is not exact");
  }
  return out;
}

namespace {

// Pointwise max (lcm) or min (gcd) of exponent vectors.
Monomial merge(std::span<const Monomial::Entry> a, std::span<const Monomial::Entry> b,
               bool take_max) {
  std::vector<Monomial::Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      if (take_max) {
        out.push_back(a[i]);
      }
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      if (take_max) {
        out.push_back(b[j]);
      }
      ++j;
    } else {
      out.emplace_back(a[i].first, take_max ? std::max(a[i].second, b[j].second)
                                             : std::min(a[i].second, b[j].second));
      ++i;
      ++j;
    }
  }
  return Monomial(std::move(out));
}

} // namespace

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  return merge(a.entries_, b.entries_, true);
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  return merge(a.entries_, b.entries_, false);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.is_one()) {
    return b;
  }
  if (b.is_one()) {
    return a;
  }
  Monomial out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      out.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      out.entries_.push_back(*j++);
    } else {
      out.entries_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [id, exp] : entries_) {
    h ^= (static_cast<std::size_t>(id) * 0x100000001b3ULL + exp) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

std::string_view to_string(OrderKind kind) {
  return kind == OrderKind::lex ? "lex" : "grevlex";
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<SymbolId> precedence,
                             std::shared_ptr<const SymbolTable> symbols)
    : kind_(kind), precedence_(std::move(precedence)), symbols_(std::move(symbols)) {
  SymbolId max_id = 0;
  for (SymbolId id : precedence_) {
    max_id = std::max(max_id, id);
  }
  rank_.assign(precedence_.empty() ? 0 : static_cast<std::size_t>(max_id) + 1, -1);
  for (std::size_t pos = 0; pos < precedence_.size(); ++pos) {
    int& slot = rank_[precedence_[pos]];
    if (slot >= 0) {
      std::string name = symbols_ ? symbols_->name(precedence_[pos])
                                  : std::to_string(precedence_[pos]);
      throw Error("duplicate symbol '" + name + "' in variable precedence");
    }
    slot = static_cast<int>(pos);
  }
}

void MonomialOrder::unknown(SymbolId id) const {
  std::string name = (symbols_ && id < symbols_->size()) ? symbols_->name(id)
                                                         : "#" + std::to_string(id);
  throw UnknownSymbolError(name, "symbol '" + name + "' is not part of the monomial order");
}

int MonomialOrder::rank(SymbolId id) const {
  if (!contains(id)) {
    unknown(id);
  }
  return rank_[id];
}

void MonomialOrder::check(const Monomial& m) const {
  for (const auto& [id, exp] : m.entries()) {
    (void)exp;
    if (!contains(id)) {
      unknown(id);
    }
  }
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == OrderKind::grevlex && a.degree() != b.degree()) {
    check(a);
    check(b);
    return a.degree() <=> b.degree();
  }
  auto ea = a.entries();
  auto eb = b.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  // lex: the differing symbol of highest precedence decides, larger exponent
  // wins. grevlex (equal degree): the differing symbol of lowest precedence
  // decides, smaller exponent wins.
  int best_rank = kind_ == OrderKind::lex ? std::numeric_limits<int>::max() : -1;
  std::strong_ordering result = std::strong_ordering::equal;
  auto consider = [&](SymbolId id, std::uint32_t x, std::uint32_t y) {
    int r = rank(id);
    if (x == y) {
      return;
    }
    if (kind_ == OrderKind::lex) {
      if (r < best_rank) {
        best_rank = r;
        result = x <=> y;
      }
    } else if (r > best_rank) {
      best_rank = r;
      result = y <=> x;
    }
  };
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      consider(ea[i].first, ea[i].second, 0);
      ++i;
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      consider(eb[j].first, 0, eb[j].second);
      ++j;
    } else {
      consider(ea[i].first, ea[i].second, eb[j].second);
      ++i;
      ++j;
    }
  }
  return result;
}

OrderPtr make_order(OrderKind kind, std::vector<SymbolId> precedence,
                    std::shared_ptr<const SymbolTable> symbols) {
  return std::make_shared<const MonomialOrder>(kind, std::move(precedence), std::move(symbols));
}

bool same_order(const OrderPtr& a, const OrderPtr& b) noexcept {
  return !a || !b || a == b || *a == *b;
}

} // namespace symprove
