#include <bc/scalar_io.hpp>

#include <cctype>
#include <sstream>

namespace bc {

namespace {

// One summand of a cyclotomic: c*z^k with rational c.
std::string render_cyc_term(const Rational& c, std::size_t k, bool lead) {
  std::ostringstream os;
  Rational a = c;
  bool neg = a < 0;
  if (neg) a = -a;
  if (lead) {
    if (neg) os << "-";
  } else {
    os << (neg ? " - " : " + ");
  }
  if (k == 0) {
    os << a.get_str();
  } else {
    if (a != 1) os << a.get_str() << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace

std::string render_cyclotomic(const Cyclotomic& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool lead = true;
  for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
    if (c.coeffs()[k] == 0) continue;
    out += render_cyc_term(c.coeffs()[k], k, lead);
    lead = false;
  }
  return out;
}

namespace {

// Renders one polynomial term; multi-summand cyclotomic coefficients get
// parenthesized so the result stays parseable.
std::string render_poly_term(const Monomial& m, const Cyclotomic& c,
                             const ParamRing& ring, bool lead) {
  std::string mono;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += ring.variable_name(static_cast<unsigned>(v));
    if (m[v] > 1) mono += "^" + std::to_string(m[v]);
  }
  std::string cs = render_cyclotomic(c);
  bool multi = cs.find(" + ") != std::string::npos ||
               cs.find(" - ") != std::string::npos;
  std::string join = lead ? "" : " + ";
  if (!multi && !lead && !cs.empty() && cs[0] == '-') {
    join = " - ";
    cs = cs.substr(1);
  }
  if (mono.empty()) return join + (multi ? "(" + cs + ")" : cs);
  if (multi) return join + "(" + cs + ")*" + mono;
  if (cs == "1") return join + mono;
  if (cs == "-1") return join + (lead ? "-" : "") + mono;
  return join + cs + "*" + mono;
}

}  // namespace

std::string render_polynomial(const Polynomial& p, const ParamRing& ring) {
  if (p.is_zero()) return "0";
  std::string out;
  bool lead = true;
  // Descending order: leading term first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    out += render_poly_term(it->first, it->second, ring, lead);
    lead = false;
  }
  return out;
}

std::string render_scalar(const ParamScalar& s, const ParamRing& ring) {
  if (s.is_polynomial()) return render_polynomial(s.numerator(), ring);
  return "(" + render_polynomial(s.numerator(), ring) + ")/(" +
         render_polynomial(s.denominator(), ring) + ")";
}

std::vector<Token> tokenize_expression(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      tokens.push_back({Token::Number, text.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      tokens.push_back({Token::Name, text.substr(i, j - i)});
      i = j;
    } else if (ch == '+' || ch == '-' || ch == '*' || ch == '/' ||
               ch == '^' || ch == '(' || ch == ')') {
      tokens.push_back({Token::Op, std::string(1, ch)});
      ++i;
    } else {
      throw InvalidInput(std::string("unexpected character '") + ch +
                         "' in expression");
    }
  }
  tokens.push_back({Token::End, ""});
  return tokens;
}

namespace {

class ScalarParser {
 public:
  ScalarParser(const std::vector<Token>& tokens, const ParamRing& ring)
      : tokens_(tokens), ring_(ring) {}

  ParamScalar parse() {
    ParamScalar v = expr();
    if (!at_end()) throw InvalidInput("trailing tokens in expression");
    return v;
  }

 private:
  const std::vector<Token>& tokens_;
  const ParamRing& ring_;
  std::size_t pos_ = 0;

  const Token& peek() const { return tokens_[pos_]; }
  bool at_end() const { return peek().kind == Token::End; }
  bool accept_op(const char* op) {
    if (peek().kind == Token::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamScalar expr() {
    ParamScalar v = term();
    while (true) {
      if (accept_op("+"))
        v += term();
      else if (accept_op("-"))
        v -= term();
      else
        return v;
    }
  }

  ParamScalar term() {
    ParamScalar v = unary();
    while (true) {
      if (accept_op("*"))
        v *= unary();
      else if (accept_op("/"))
        v = v / unary();
      else
        return v;
    }
  }

  ParamScalar unary() {
    if (accept_op("-")) return -unary();
    return power();
  }

  ParamScalar power() {
    ParamScalar base = atom();
    if (accept_op("^")) {
      bool neg = accept_op("-");
      if (peek().kind != Token::Number)
        throw InvalidInput("exponent must be an integer");
      long e = std::stol(peek().text);
      ++pos_;
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  ParamScalar atom() {
    const Token& t = peek();
    if (t.kind == Token::Number) {
      ++pos_;
      return ParamScalar::from_rational(parse_rational(t.text));
    }
    if (t.kind == Token::Name) {
      ++pos_;
      if (t.text == "z")
        return ParamScalar::from_cyclotomic(
            Cyclotomic::root_of_unity(ring_.conductor(), 1));
      int var = ring_.variable_by_name(t.text);
      if (var < 0) throw InvalidInput("unknown symbol: " + t.text);
      return ParamScalar::variable(static_cast<unsigned>(var));
    }
    if (t.kind == Token::Op && t.text == "(") {
      ++pos_;
      ParamScalar v = expr();
      if (!accept_op(")")) throw InvalidInput("missing ')'");
      return v;
    }
    throw InvalidInput("unexpected token in expression");
  }
};

}  // namespace

ParamScalar parse_scalar(const std::string& text, const ParamRing& ring) {
  return ScalarParser(tokenize_expression(text), ring).parse();
}

Cyclotomic parse_cyclotomic(const std::string& text, long conductor) {
  ParamRing ring(conductor, 0, 0);
  ParamScalar s = parse_scalar(text, ring);
  if (!s.is_constant())
    throw InvalidInput("expected a constant expression: " + text);
  return s.constant_value();
}

}  // namespace bc
