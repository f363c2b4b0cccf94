#include "symprove/io.hpp"

#include <cctype>
#include <cstdio>
#include <fcntl.h>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <unistd.h>

namespace symprove {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text, std::size_t first_line) {
  std::vector<Token> out;
  std::size_t line = first_line;
  std::size_t col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    std::size_t start = i;
    std::size_t start_col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      out.push_back({Tok::number, std::string(text.substr(start, i - start)), line, start_col});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::ident, std::string(text.substr(start, i - start)), line, start_col});
    } else {
      Tok kind = Tok::end;
      switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      ++i;
      out.push_back({kind, std::string(1, c), line, start_col});
    }
    col += i - start;
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> tokens, const SymbolTable& table, const OrderPtr& order)
      : toks_(std::move(tokens)), table_(table), order_(order) {}

  QPolynomial parse() {
    QPolynomial f = expr();
    if (peek().kind != Tok::end) {
      fail("unexpected '" + peek().text + "'");
    }
    return f;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().line, peek().column);
  }

  QPolynomial expr() {
    bool negate = false;
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      negate = next().kind == Tok::minus;
    }
    QPolynomial acc = term();
    if (negate) {
      acc = -acc;
    }
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool minus = next().kind == Tok::minus;
      QPolynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  QPolynomial term() {
    QPolynomial acc = factor();
    while (peek().kind == Tok::star) {
      next();
      acc = acc * factor();
    }
    if (peek().kind == Tok::slash) {
      fail("division is only allowed inside a rational literal");
    }
    return acc;
  }

  QPolynomial factor() {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      next();
      Rational value(Integer(t.text), 1);
      if (peek().kind == Tok::slash) {
        next();
        if (peek().kind != Tok::number) {
          fail("expected a positive integer denominator");
        }
        Integer den(next().text);
        if (den == 0) {
          throw ParseError("zero denominator", toks_[pos_ - 1].line, toks_[pos_ - 1].column);
        }
        value = Rational(Integer(t.text), den);
        value.canonicalize();
      }
      return QPolynomial::constant(value, order_);
    }
    if (t.kind == Tok::ident) {
      next();
      auto id = table_.find(t.text);
      if (!id || !order_ || !order_->contains(*id)) {
        throw ParseError("unknown identifier '" + t.text + "'", t.line, t.column);
      }
      std::uint32_t exp = 1;
      if (peek().kind == Tok::caret) {
        next();
        if (peek().kind != Tok::number) {
          fail("malformed exponent: expected a positive integer");
        }
        const Token& e = next();
        Integer value(e.text);
        if (value == 0 || value > std::numeric_limits<std::uint32_t>::max() / 2) {
          throw ParseError("malformed exponent '" + e.text + "'", e.line, e.column);
        }
        exp = static_cast<std::uint32_t>(value.get_ui());
      }
      return QPolynomial::term(Rational(1), Monomial::variable(*id, exp), order_);
    }
    if (t.kind == Tok::lparen) {
      next();
      QPolynomial inner = expr();
      if (peek().kind != Tok::rparen) {
        fail("expected ')'");
      }
      next();
      return inner;
    }
    if (t.kind == Tok::end) {
      fail("unexpected end of expression");
    }
    fail("unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  const SymbolTable& table_;
  const OrderPtr& order_;
  std::size_t pos_ = 0;
};

std::string render_monomial(const Monomial& m, const OrderPtr& order) {
  // Symbols appear in precedence order, not id order.
  std::vector<Monomial::Entry> entries(m.entries().begin(), m.entries().end());
  if (order) {
    std::sort(entries.begin(), entries.end(), [&order](const auto& x, const auto& y) {
      return order->rank(x.first) < order->rank(y.first);
    });
  }
  const SymbolTable* table = order ? order->symbols().get() : nullptr;
  std::string out;
  for (const auto& [id, exp] : entries) {
    if (!out.empty()) {
      out += '*';
    }
    out += table ? table->name(id) : "#" + std::to_string(id);
    if (exp > 1) {
      out += '^' + std::to_string(exp);
    }
  }
  return out;
}

// Appends " + body" / " - body" (or a leading "-") for a term whose
// coefficient sign is `negative` and whose unsigned text is `body`.
void append_term(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
    ++b;
  }
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
    --e;
  }
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss{std::string(s)};
  while (std::getline(ss, item, ',')) {
    std::string t = trim(item);
    if (!t.empty()) {
      out.push_back(t);
    }
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return trim(line.substr(0, hash));
}

} // namespace

QPolynomial parse_polynomial(std::string_view text, const SymbolTable& table, const OrderPtr& order,
                             std::size_t first_line) {
  Parser parser(tokenize(text, first_line), table, order);
  return parser.parse();
}

std::string render_polynomial(const QPolynomial& f) {
  if (f.is_zero()) {
    return "0";
  }
  std::string out;
  for (const auto& t : f.terms()) {
    bool negative = sgn(t.coeff) < 0;
    Rational mag = abs(t.coeff);
    std::string body;
    if (t.mono.is_one()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = render_monomial(t.mono, f.order());
    } else {
      body = mag.get_str() + "*" + render_monomial(t.mono, f.order());
    }
    append_term(out, negative, body);
  }
  return out;
}

std::string render_rational_function(const RationalFunction& r) {
  if (r.is_polynomial()) {
    return render_polynomial(r.numerator());
  }
  return "(" + render_polynomial(r.numerator()) + ")/(" + render_polynomial(r.denominator()) + ")";
}

std::string render_polynomial(const RPolynomial& f) {
  if (f.is_zero()) {
    return "0";
  }
  std::string out;
  for (const auto& t : f.terms()) {
    const RationalFunction& c = t.coeff;
    bool negative = false;
    std::string coeff_text;
    if (c.is_polynomial() && c.numerator().is_constant()) {
      Rational v = c.numerator().constant_term();
      negative = sgn(v) < 0;
      coeff_text = abs(v) == 1 && !t.mono.is_one() ? "" : Rational(abs(v)).get_str();
    } else if (c.is_polynomial() && c.numerator().size() == 1) {
      negative = sgn(c.numerator().leading_coeff()) < 0;
      coeff_text = render_polynomial(negative ? QPolynomial(-c.numerator()) : c.numerator());
    } else if (c.is_polynomial()) {
      coeff_text = "(" + render_polynomial(c.numerator()) + ")";
    } else {
      coeff_text = render_rational_function(c);
    }
    std::string body = coeff_text;
    if (!t.mono.is_one()) {
      std::string mono = render_monomial(t.mono, f.order());
      body = body.empty() ? mono : body + "*" + mono;
    }
    append_term(out, negative, body);
  }
  return out;
}

RPolynomial split_parameters(const QPolynomial& f, const OrderPtr& variables,
                             const OrderPtr& parameters) {
  std::unordered_map<Monomial, std::vector<Term<Rational>>, MonomialHash> parts;
  std::vector<Monomial> seen;
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Entry> var_part;
    std::vector<Monomial::Entry> par_part;
    for (const auto& e : t.mono.entries()) {
      if (variables && variables->contains(e.first)) {
        var_part.push_back(e);
      } else {
        par_part.push_back(e);
      }
    }
    Monomial vm(std::move(var_part));
    auto [it, inserted] = parts.try_emplace(vm);
    if (inserted) {
      seen.push_back(vm);
    }
    it->second.push_back(Term<Rational>{t.coeff, Monomial(std::move(par_part))});
  }
  std::vector<Term<RationalFunction>> terms;
  for (const auto& vm : seen) {
    QPolynomial coeff(parameters, std::move(parts[vm]));
    terms.push_back(Term<RationalFunction>{RationalFunction(std::move(coeff)), vm});
  }
  return RPolynomial(variables, std::move(terms));
}

QPolynomial IdealFile::parse(std::string_view expr, std::size_t line) const {
  return parse_polynomial(expr, *symbols, joint_order, line);
}

QPolynomial IdealFile::to_rational(const QPolynomial& f) const { return f.with_order(order); }

RPolynomial IdealFile::to_parametric(const QPolynomial& f) const {
  return split_parameters(f, order, parameter_order);
}

IdealFile parse_ideal_file(std::string_view text) {
  IdealFile file;
  OrderKind kind = OrderKind::lex;
  bool have_vars = false;
  bool have_params = false;
  bool have_order = false;
  std::vector<std::pair<std::string, std::size_t>> body;
  std::size_t line_no = 0;
  std::stringstream ss{std::string(text)};
  std::string raw;
  auto declare = [&](const std::string& list, std::size_t line, SymbolKind sk,
                     std::vector<SymbolId>& into) {
    for (const auto& name : split_list(list)) {
      if (!is_identifier(name)) {
        throw ParseError("invalid identifier '" + name + "'", line, 1);
      }
      if (file.symbols->find(name)) {
        throw ParseError("symbol '" + name + "' declared twice", line, 1);
      }
      into.push_back(file.symbols->add(name, sk));
    }
  };
  while (std::getline(ss, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (line.empty()) {
      continue;
    }
    auto colon = line.find(':');
    std::string key = colon == std::string::npos ? "" : trim(line.substr(0, colon));
    std::string value = colon == std::string::npos ? "" : trim(line.substr(colon + 1));
    if (key == "vars" || key == "variables") {
      if (have_vars || !body.empty()) {
        throw ParseError("'vars:' must appear once, before the generators", line_no, 1);
      }
      have_vars = true;
      declare(value, line_no, SymbolKind::derivative, file.variables);
    } else if (key == "params" || key == "parameters") {
      if (have_params || !body.empty()) {
        throw ParseError("'params:' must appear once, before the generators", line_no, 1);
      }
      have_params = true;
      declare(value, line_no, SymbolKind::parameter, file.parameters);
    } else if (key == "order") {
      if (have_order || !body.empty()) {
        throw ParseError("'order:' must appear once, before the generators", line_no, 1);
      }
      have_order = true;
      if (value == "lex") {
        kind = OrderKind::lex;
      } else if (value == "grevlex") {
        kind = OrderKind::grevlex;
      } else {
        throw ParseError("unknown order '" + value + "' (expected lex or grevlex)", line_no,
                         colon + 2);
      }
    } else if (!key.empty()) {
      throw ParseError("unknown header '" + key + "'", line_no, 1);
    } else {
      body.emplace_back(raw.substr(0, raw.find('#')), line_no);
    }
  }
  if (!have_vars || file.variables.empty()) {
    throw ParseError("missing 'vars:' header", 1, 1);
  }
  file.order = make_order(kind, file.variables, file.symbols);
  if (file.has_parameters()) {
    file.parameter_order = make_order(OrderKind::grevlex, file.parameters, file.symbols);
  }
  std::vector<SymbolId> joint = file.variables;
  joint.insert(joint.end(), file.parameters.begin(), file.parameters.end());
  file.joint_order = make_order(OrderKind::lex, joint, file.symbols);
  for (const auto& [expr, line] : body) {
    file.generators.push_back(file.parse(expr, line));
  }
  bool any_nonzero = std::any_of(file.generators.begin(), file.generators.end(),
                                 [](const QPolynomial& g) { return !g.is_zero(); });
  if (!any_nonzero) {
    throw ParseError("the ideal needs at least one nonzero generator", line_no + 1, 1);
  }
  return file;
}

std::vector<std::pair<std::string, Rational>> parse_coefficient_file(std::string_view text) {
  std::vector<std::pair<std::string, Rational>> out;
  std::set<std::string> keys;
  std::stringstream ss{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(ss, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (line.empty()) {
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected 'key = rational'", line_no, 1);
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!is_identifier(key)) {
      throw ParseError("invalid key '" + key + "'", line_no, 1);
    }
    if (!keys.insert(key).second) {
      throw ParseError("duplicate key '" + key + "'", line_no, 1);
    }
    std::string compact;
    for (char c : value) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        compact += c;
      }
    }
    try {
      out.emplace_back(key, parse_rational(compact));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no, eq + 2);
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw Error("cannot read '" + path + "'");
  }
  return buf.str();
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
  std::random_device rd;
  std::string tmp;
  int fd = -1;
  for (int attempt = 0; attempt < 16 && fd < 0; ++attempt) {
    tmp = (dir / ("." + target.filename().string() + ".tmp" + std::to_string(rd()))).string();
    fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_EXCL, 0644);
  }
  if (fd < 0) {
    throw Error("cannot create a temporary file next to '" + path + "'");
  }
  std::size_t done = 0;
  while (done < contents.size()) {
    ssize_t n = ::write(fd, contents.data() + done, contents.size() - done);
    if (n <= 0) {
      ::close(fd);
      ::unlink(tmp.c_str());
      throw Error("cannot write '" + path + "'");
    }
    done += static_cast<std::size_t>(n);
  }
  if (::close(fd) != 0 || std::rename(tmp.c_str(), path.c_str()) != 0) {
    ::unlink(tmp.c_str());
    throw Error("cannot write '" + path + "'");
  }
}

} // namespace symprove
