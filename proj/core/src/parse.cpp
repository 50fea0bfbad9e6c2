#include "cadorder/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace cadorder {

ProblemFormat format_from_string(const std::string& s) {
  if (s == "plain") return ProblemFormat::Plain;
  if (s == "smtlib" || s == "smtlib-subset" || s == "smt2") return ProblemFormat::SmtLibSubset;
  throw std::invalid_argument("unknown problem format: " + s);
}

namespace {

// Base 10 always; the default mpz_class string constructor would read a
// leading zero as octal.
BigInt parse_bigint(const std::string& s) { return BigInt(s, 10); }

// ---------------------------------------------------------------------------
// Plain format
// ---------------------------------------------------------------------------

struct PlainCursor {
  const std::string& s;
  size_t pos = 0;
  int line;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, static_cast<int>(pos) + 1, msg); }

  BigInt integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return parse_bigint(s.substr(start, pos - start));
  }

  int var_index(int num_vars) {
    skip_ws();
    if (pos >= s.size() || s[pos] != 'x') fail("expected variable");
    ++pos;
    BigInt idx = integer();
    if (idx < 0 || idx >= num_vars)
      fail("variable index out of range (" + std::to_string(num_vars) + " variables)");
    return static_cast<int>(idx.get_si());
  }
};

Monomial parse_plain_term(PlainCursor& c, int num_vars) {
  Monomial m;
  m.exponents.assign(static_cast<size_t>(num_vars), 0);
  m.coeff = 1;
  bool saw_factor = false;
  bool expect_factor = true;
  while (expect_factor) {
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      m.coeff *= c.integer();
    } else if (ch == 'x') {
      int v = c.var_index(num_vars);
      int e = 1;
      if (c.peek() == '^') {
        ++c.pos;
        BigInt exp = c.integer();
        if (exp < 0) c.fail("negative exponent");
        e = static_cast<int>(exp.get_si());
      }
      m.exponents[static_cast<size_t>(v)] += e;
    } else {
      c.fail("expected coefficient or variable");
    }
    saw_factor = true;
    expect_factor = c.peek() == '*';
    if (expect_factor) ++c.pos;
  }
  if (!saw_factor) c.fail("empty term");
  return m;
}

Polynomial parse_plain_line(const std::string& text, int num_vars, int line_no) {
  PlainCursor c{text, 0, line_no};
  std::vector<Monomial> terms;
  int sign = 1;
  if (c.peek() == '-') {
    sign = -1;
    ++c.pos;
  } else if (c.peek() == '+') {
    ++c.pos;
  }
  while (true) {
    Monomial m = parse_plain_term(c, num_vars);
    m.coeff *= sign;
    terms.push_back(std::move(m));
    if (c.done()) break;
    char ch = c.peek();
    if (ch == '+')
      sign = 1;
    else if (ch == '-')
      sign = -1;
    else
      c.fail("expected '+' or '-'");
    ++c.pos;
  }
  return Polynomial(num_vars, std::move(terms));
}

// ---------------------------------------------------------------------------
// SMT-LIB subset
// ---------------------------------------------------------------------------

struct SExpr {
  // Atom when children is empty and token non-empty; list otherwise.
  std::string token;
  std::vector<SExpr> children;
  int line = 1;
  int col = 1;
  bool is_atom() const { return children.empty() && !token.empty(); }
};

struct SmtLexer {
  const std::string& s;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  void advance() {
    if (pos < s.size() && s[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_ws() {
    while (pos < s.size()) {
      char ch = s[pos];
      if (ch == ';') {
        while (pos < s.size() && s[pos] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col, msg); }

  SExpr parse_expr() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    SExpr e;
    e.line = line;
    e.col = col;
    if (s[pos] == '(') {
      advance();
      skip_ws();
      while (pos < s.size() && s[pos] != ')') {
        e.children.push_back(parse_expr());
        skip_ws();
      }
      if (pos >= s.size()) fail("unbalanced '('");
      advance();  // ')'
      if (e.children.empty()) e.token = "()";
    } else if (s[pos] == ')') {
      fail("unexpected ')'");
    } else {
      size_t start = pos;
      while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '(' &&
             s[pos] != ')' && s[pos] != ';')
        advance();
      e.token = s.substr(start, pos - start);
    }
    return e;
  }

  std::vector<SExpr> parse_all() {
    std::vector<SExpr> out;
    skip_ws();
    while (pos < s.size()) {
      out.push_back(parse_expr());
      skip_ws();
    }
    return out;
  }
};

// Polynomial with a positive integer denominator, enough to clear rational
// literals by the end of each atom.
struct RatPoly {
  Polynomial num;
  BigInt den;

  static RatPoly from_poly(Polynomial p) { return {std::move(p), BigInt(1)}; }
};

RatPoly rp_add(const RatPoly& a, const RatPoly& b) {
  BigInt g = gcd(a.den, b.den);
  BigInt den = a.den / g * b.den;
  return {a.num * (den / a.den) + b.num * (den / b.den), den};
}
RatPoly rp_neg(const RatPoly& a) { return {-a.num, a.den}; }
RatPoly rp_mul(const RatPoly& a, const RatPoly& b) { return {a.num * b.num, a.den * b.den}; }

struct SmtContext {
  int num_vars = kDefaultNumVars;
  std::map<std::string, int> vars;  // name -> index, by declaration order
  std::vector<Polynomial> polys;

  [[noreturn]] static void fail(const SExpr& e, const std::string& msg) {
    throw ParseError(e.line, e.col, msg);
  }

  void declare(const SExpr& where, const std::string& name) {
    if (vars.count(name)) return;
    if (static_cast<int>(vars.size()) >= num_vars)
      fail(where, "more than " + std::to_string(num_vars) + " variables declared");
    int idx = static_cast<int>(vars.size());
    vars.emplace(name, idx);
  }

  RatPoly numeral(const SExpr& e) {
    const std::string& t = e.token;
    size_t dot = t.find('.');
    if (dot == std::string::npos) {
      for (size_t i = 0; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])) && !(i == 0 && t[i] == '-'))
          fail(e, "malformed numeral '" + t + "'");
      return RatPoly::from_poly(Polynomial::constant(parse_bigint(t), num_vars));
    }
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    size_t frac_len = t.size() - dot - 1;
    BigInt den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return {Polynomial::constant(parse_bigint(digits), num_vars), den};
  }

  RatPoly eval(const SExpr& e) {
    if (e.is_atom()) {
      auto it = vars.find(e.token);
      if (it != vars.end())
        return RatPoly::from_poly(Polynomial::variable(it->second, num_vars));
      if (!e.token.empty() && (std::isdigit(static_cast<unsigned char>(e.token[0])) ||
                               (e.token[0] == '-' && e.token.size() > 1)))
        return numeral(e);
      fail(e, "undeclared symbol '" + e.token + "'");
    }
    if (e.children.empty() || !e.children[0].is_atom()) fail(e, "expected operator");
    const std::string& op = e.children[0].token;
    size_t argc = e.children.size() - 1;
    if (op == "+") {
      if (argc < 1) fail(e, "'+' needs arguments");
      RatPoly acc = eval(e.children[1]);
      for (size_t i = 2; i < e.children.size(); ++i) acc = rp_add(acc, eval(e.children[i]));
      return acc;
    }
    if (op == "-") {
      if (argc < 1) fail(e, "'-' needs arguments");
      if (argc == 1) return rp_neg(eval(e.children[1]));
      RatPoly acc = eval(e.children[1]);
      for (size_t i = 2; i < e.children.size(); ++i) acc = rp_add(acc, rp_neg(eval(e.children[i])));
      return acc;
    }
    if (op == "*") {
      if (argc < 1) fail(e, "'*' needs arguments");
      RatPoly acc = eval(e.children[1]);
      for (size_t i = 2; i < e.children.size(); ++i) acc = rp_mul(acc, eval(e.children[i]));
      return acc;
    }
    if (op == "^") {
      if (argc != 2) fail(e, "'^' needs two arguments");
      const SExpr& exp = e.children[2];
      if (!exp.is_atom()) fail(exp, "exponent must be a non-negative integer literal");
      for (char ch : exp.token)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          fail(exp, "exponent must be a non-negative integer literal");
      long k = std::stol(exp.token);
      RatPoly base = eval(e.children[1]);
      RatPoly acc = RatPoly::from_poly(Polynomial::constant(1, num_vars));
      for (long i = 0; i < k; ++i) acc = rp_mul(acc, base);
      return acc;
    }
    if (op == "/") {
      // Rational literal only, e.g. (/ 1 2).
      if (argc != 2) fail(e, "'/' needs two arguments");
      RatPoly a = eval(e.children[1]);
      RatPoly b = eval(e.children[2]);
      if (!b.num.is_constant() || b.num.is_zero() || !a.num.is_constant())
        fail(e, "'/' supported for numeric literals only");
      BigInt bq = b.num.is_zero() ? BigInt(0) : b.num.terms()[0].coeff;
      BigInt num = a.num.is_zero() ? BigInt(0) : a.num.terms()[0].coeff;
      BigInt new_num = num * b.den;
      BigInt new_den = a.den * bq;
      if (new_den < 0) {
        new_den = -new_den;
        new_num = -new_num;
      }
      return {Polynomial::constant(new_num, num_vars), new_den};
    }
    fail(e, "unsupported arithmetic operator '" + op + "'");
  }

  void collect_atoms(const SExpr& e) {
    if (e.is_atom()) {
      if (e.token == "true" || e.token == "false") return;
      fail(e, "expected a formula, got '" + e.token + "'");
    }
    if (e.children.empty() || !e.children[0].is_atom()) fail(e, "expected a formula");
    const std::string& op = e.children[0].token;
    if (op == "and" || op == "or" || op == "not") {
      for (size_t i = 1; i < e.children.size(); ++i) collect_atoms(e.children[i]);
      return;
    }
    if (op == "<" || op == "<=" || op == "=" || op == ">=" || op == ">") {
      if (e.children.size() < 3) fail(e, "relation needs at least two arguments");
      // Chained relations contribute one polynomial per adjacent pair.
      for (size_t i = 1; i + 1 < e.children.size(); ++i) {
        RatPoly lhs = eval(e.children[i]);
        RatPoly rhs = eval(e.children[i + 1]);
        RatPoly diff = rp_add(lhs, rp_neg(rhs));
        polys.push_back(diff.num);  // denominator is positive, sign-irrelevant
      }
      return;
    }
    fail(e, "unsupported connective or relation '" + op + "'");
  }

  void top_level(const SExpr& e) {
    if (e.is_atom() || e.children.empty() || !e.children[0].is_atom()) return;
    const std::string& head = e.children[0].token;
    if (head == "declare-fun") {
      if (e.children.size() != 4) fail(e, "declare-fun expects (declare-fun name () Real)");
      if (!e.children[2].children.empty()) fail(e, "only constant declarations are supported");
      declare(e, e.children[1].token);
    } else if (head == "declare-const") {
      if (e.children.size() != 3) fail(e, "declare-const expects (declare-const name Real)");
      declare(e, e.children[1].token);
    } else if (head == "assert") {
      if (e.children.size() != 2) fail(e, "assert expects one formula");
      collect_atoms(e.children[1]);
    } else if (head == "set-logic" || head == "set-info" || head == "set-option" ||
               head == "check-sat" || head == "exit" || head == "get-model") {
      // ignored
    } else {
      fail(e, "unsupported command '" + head + "'");
    }
  }
};

}  // namespace

Polynomial parse_polynomial_plain(const std::string& text, int num_vars) {
  return parse_plain_line(text, num_vars, 1);
}

Problem parse_problem(const std::string& text, ProblemFormat format, std::string id) {
  std::vector<Polynomial> polys;
  if (format == ProblemFormat::Plain) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      size_t hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      bool blank = true;
      for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
      if (blank) continue;
      polys.push_back(parse_plain_line(line, kDefaultNumVars, line_no));
    }
  } else {
    SmtLexer lexer{text};
    SmtContext ctx;
    for (const auto& form : lexer.parse_all()) ctx.top_level(form);
    polys = std::move(ctx.polys);
  }
  return make_problem(std::move(id), kDefaultNumVars, std::move(polys));
}

}  // namespace cadorder
