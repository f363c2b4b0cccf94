#pragma once

#include "symprove/polynomial.hpp"
#include "symprove/rational_function.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace symprove {

/// Parses
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | identifier ('^' natural)? | '(' expr ')'
/// Whitespace is insignificant; `rational` is integer ('/' positive-integer)?.
/// Identifiers must be symbols of `order`. Throws ParseError with a 1-based
/// position; `first_line` offsets line numbers for multi-line files.
QPolynomial parse_polynomial(std::string_view text, const SymbolTable& table, const OrderPtr& order,
                             std::size_t first_line = 1);

/// Descending-order text such as "x^2 - 1/2*y"; "0" for zero. Parses back to
/// the same polynomial.
std::string render_polynomial(const QPolynomial& f);

/// "(num)/(den)", or just the numerator when the denominator is 1.
std::string render_rational_function(const RationalFunction& r);

/// Terms with rational-function coefficients, e.g. "(t + 1)*x - 1/(t)*y".
std::string render_polynomial(const RPolynomial& f);

/// Moves every symbol outside `variables` into the coefficient.
RPolynomial split_parameters(const QPolynomial& f, const OrderPtr& variables,
                             const OrderPtr& parameters);

/// Ideal description read from text:
///   vars: x, y          (precedence, highest first)
///   params: t           (optional; turns coefficients into Q(t))
///   order: lex          (lex or grevlex, default lex)
///   x^2 - t*y           (one generator per line)
/// '#' starts a comment; blank lines are ignored.
struct IdealFile {
  SymbolTablePtr symbols = std::make_shared<SymbolTable>();
  std::vector<SymbolId> variables;
  std::vector<SymbolId> parameters;
  OrderPtr order;            // over the variables
  OrderPtr parameter_order;  // grevlex over the parameters, null without parameters
  OrderPtr joint_order;      // lex over variables then parameters, for parsing
  std::vector<QPolynomial> generators;  // over joint_order

  bool has_parameters() const noexcept { return !parameters.empty(); }

  /// Generator text read with the file's declarations.
  QPolynomial parse(std::string_view expr, std::size_t line = 1) const;
  QPolynomial to_rational(const QPolynomial& f) const;  // requires no parameters
  RPolynomial to_parametric(const QPolynomial& f) const;
};

IdealFile parse_ideal_file(std::string_view text);

/// Flat `key = rational` list with '#' comments. Keys keep file order and
/// must be unique.
std::vector<std::pair<std::string, Rational>> parse_coefficient_file(std::string_view text);

/// Whole file as a string; throws Error naming the path on failure.
std::string read_file(const std::string& path);

/// Writes through a freshly created sibling temporary file and renames it
/// into place, so readers never observe partial output.
void write_file_atomic(const std::string& path, std::string_view contents);

} // namespace symprove
