#pragma once

#include "symprove/symbol.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace symprove {

/// Power product of symbols. Entries are sorted by symbol id and never carry
/// a zero exponent, so the empty monomial is 1.
class Monomial {
public:
  using Entry = std::pair<SymbolId, std::uint32_t>;

  Monomial() = default;

  /// Accepts entries in any order; merges duplicates and drops zeros.
  explicit Monomial(std::vector<Entry> entries);

  static Monomial variable(SymbolId id, std::uint32_t exponent = 1);

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t exponent(SymbolId id) const noexcept;
  bool is_one() const noexcept { return entries_.empty(); }

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  /// `*this / divisor`; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.entries_ == b.entries_;
  }

  std::size_t hash() const noexcept;

private:
  std::vector<Entry> entries_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind { lex, grevlex };

std::string_view to_string(OrderKind kind);

/// Lexicographic or graded-reverse-lexicographic order over an explicit
/// precedence list (highest first).
class MonomialOrder {
public:
  MonomialOrder(OrderKind kind, std::vector<SymbolId> precedence,
                std::shared_ptr<const SymbolTable> symbols);

  OrderKind kind() const noexcept { return kind_; }
  std::span<const SymbolId> precedence() const noexcept { return precedence_; }
  const std::shared_ptr<const SymbolTable>& symbols() const noexcept { return symbols_; }

  bool contains(SymbolId id) const noexcept {
    return id < rank_.size() && rank_[id] >= 0;
  }
  /// Position in the precedence list, 0 = highest. Throws UnknownSymbolError.
  int rank(SymbolId id) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  /// Throws UnknownSymbolError if `m` mentions a symbol outside the order.
  void check(const Monomial& m) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) noexcept {
    return a.kind_ == b.kind_ && a.precedence_ == b.precedence_;
  }

private:
  [[noreturn]] void unknown(SymbolId id) const;

  OrderKind kind_;
  std::vector<SymbolId> precedence_;
  std::vector<int> rank_;
  std::shared_ptr<const SymbolTable> symbols_;
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

OrderPtr make_order(OrderKind kind, std::vector<SymbolId> precedence,
                    std::shared_ptr<const SymbolTable> symbols);

inline std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                             const MonomialOrder& order) {
  return order.compare(a, b);
}

/// Same order, or at least one side is unordered (constant polynomials).
bool same_order(const OrderPtr& a, const OrderPtr& b) noexcept;

} // namespace symprove
