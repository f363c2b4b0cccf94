#include "symprove/rational.hpp"

#include "symprove/error.hpp"

#include <cctype>

namespace symprove {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
  Rational value;
  value.get_num() = Integer(std::string(num));
  value.get_den() = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den));
  if (value.get_den() == 0) {
    throw Error("zero denominator in rational '" + std::string(text) + "'");
  }
  value.canonicalize();
  if (negative) {
    value = -value;
  }
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

} // namespace symprove
