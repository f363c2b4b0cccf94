#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symprove {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A monomial, polynomial, or assignment mentions a symbol the consumer does
/// not know about.
class UnknownSymbolError : public Error {
public:
  UnknownSymbolError(std::string symbol, const std::string& what)
      : Error(what), symbol_(std::move(symbol)) {}

  const std::string& symbol() const noexcept { return symbol_; }

private:
  std::string symbol_;
};

/// Division by zero, leading term of the zero polynomial, incompatible rings.
class ArithmeticError : public Error {
public:
  using Error::Error;
};

class SingularSystemError : public Error {
public:
  using Error::Error;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_processed = 0;
  std::size_t pairs_pruned = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_peak = 0;
};

/// Buchberger ran past its S-pair budget.
class BudgetExceededError : public Error {
public:
  BudgetExceededError(const std::string& what, GroebnerStats stats)
      : Error(what), stats_(stats) {}

  const GroebnerStats& stats() const noexcept { return stats_; }

private:
  GroebnerStats stats_;
};

/// Malformed polynomial text or input file. Line and column are 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace symprove
