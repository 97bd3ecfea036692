#include "minksurf/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

namespace minksurf::expr {

namespace {

bool is_const(const ExprPtr& e) { return e->kind() == ExprNode::Kind::Const; }
bool is_const_value(const ExprPtr& e, Complex c) { return is_const(e) && e->value() == c; }

// Integer power by binary exponentiation. Exact complex multiplies only, so
// real inputs with real results stay real.
Complex cpow_int(Complex base, int n, Complex at) {
  if (n < 0) {
    if (base == Complex(0.0, 0.0)) throw EvalSingularity(at);
    return 1.0 / cpow_int(base, -n, at);
  }
  Complex acc(1.0, 0.0);
  Complex sq = base;
  unsigned e = static_cast<unsigned>(n);
  while (e != 0) {
    if (e & 1u) acc *= sq;
    e >>= 1u;
    if (e != 0) sq *= sq;
  }
  return acc;
}

}  // namespace

ExprPtr ExprNode::var() {
  static const ExprPtr w(new ExprNode(Kind::Var, {}, 0, nullptr, nullptr));
  return w;
}

ExprPtr ExprNode::constant(Complex c) {
  return ExprPtr(new ExprNode(Kind::Const, c, 0, nullptr, nullptr));
}

ExprPtr ExprNode::add(ExprPtr a, ExprPtr b) {
  if (is_const(a) && is_const(b)) return constant(a->value() + b->value());
  if (is_const_value(a, {})) return b;
  if (is_const_value(b, {})) return a;
  return ExprPtr(new ExprNode(Kind::Add, {}, 0, std::move(a), std::move(b)));
}

ExprPtr ExprNode::sub(ExprPtr a, ExprPtr b) {
  if (is_const(a) && is_const(b)) return constant(a->value() - b->value());
  if (is_const_value(b, {})) return a;
  if (is_const_value(a, {})) return neg(std::move(b));
  return ExprPtr(new ExprNode(Kind::Sub, {}, 0, std::move(a), std::move(b)));
}

ExprPtr ExprNode::mul(ExprPtr a, ExprPtr b) {
  if (is_const(a) && is_const(b)) return constant(a->value() * b->value());
  if (is_const_value(a, {}) || is_const_value(b, {})) return constant({});
  if (is_const_value(a, Complex(1.0, 0.0))) return b;
  if (is_const_value(b, Complex(1.0, 0.0))) return a;
  return ExprPtr(new ExprNode(Kind::Mul, {}, 0, std::move(a), std::move(b)));
}

ExprPtr ExprNode::div(ExprPtr a, ExprPtr b) {
  if (is_const(a) && is_const(b) && b->value() != Complex(0.0, 0.0))
    return constant(a->value() / b->value());
  if (is_const_value(b, Complex(1.0, 0.0))) return a;
  return ExprPtr(new ExprNode(Kind::Div, {}, 0, std::move(a), std::move(b)));
}

ExprPtr ExprNode::neg(ExprPtr a) {
  if (is_const(a)) return constant(-a->value());
  if (a->kind() == Kind::Neg) return a->lhs();
  return ExprPtr(new ExprNode(Kind::Neg, {}, 0, std::move(a), nullptr));
}

ExprPtr ExprNode::pow_int(ExprPtr base, int n) {
  if (n == 0) return constant(Complex(1.0, 0.0));
  if (n == 1) return base;
  if (is_const(base) && !(n < 0 && base->value() == Complex(0.0, 0.0)))
    return constant(cpow_int(base->value(), n, {}));
  return ExprPtr(new ExprNode(Kind::PowInt, {}, n, std::move(base), nullptr));
}

ExprPtr ExprNode::apply(Kind fn, ExprPtr arg) {
  if (is_const(arg)) {
    const Complex c = arg->value();
    switch (fn) {
      case Kind::Sin: return constant(std::sin(c));
      case Kind::Cos: return constant(std::cos(c));
      case Kind::Exp: return constant(std::exp(c));
      case Kind::Sinh: return constant(std::sinh(c));
      case Kind::Cosh: return constant(std::cosh(c));
      default: break;
    }
  }
  return ExprPtr(new ExprNode(fn, {}, 0, std::move(arg), nullptr));
}

Complex eval(const ExprNode& f, Complex w) {
  using K = ExprNode::Kind;
  switch (f.kind()) {
    case K::Var: return w;
    case K::Const: return f.value();
    case K::Add: return eval(*f.lhs(), w) + eval(*f.rhs(), w);
    case K::Sub: return eval(*f.lhs(), w) - eval(*f.rhs(), w);
    case K::Mul: return eval(*f.lhs(), w) * eval(*f.rhs(), w);
    case K::Div: {
      const Complex den = eval(*f.rhs(), w);
      if (den == Complex(0.0, 0.0)) throw EvalSingularity(w);
      return eval(*f.lhs(), w) / den;
    }
    case K::Neg: return -eval(*f.lhs(), w);
    case K::PowInt: return cpow_int(eval(*f.lhs(), w), f.exponent(), w);
    case K::Sin: return std::sin(eval(*f.lhs(), w));
    case K::Cos: return std::cos(eval(*f.lhs(), w));
    case K::Exp: return std::exp(eval(*f.lhs(), w));
    case K::Sinh: return std::sinh(eval(*f.lhs(), w));
    case K::Cosh: return std::cosh(eval(*f.lhs(), w));
  }
  throw Error("corrupt expression node");
}

ExprPtr differentiate(const ExprNode& f) {
  using K = ExprNode::Kind;
  using E = ExprNode;
  switch (f.kind()) {
    case K::Var: return E::constant(Complex(1.0, 0.0));
    case K::Const: return E::constant({});
    case K::Add: return E::add(differentiate(*f.lhs()), differentiate(*f.rhs()));
    case K::Sub: return E::sub(differentiate(*f.lhs()), differentiate(*f.rhs()));
    case K::Mul:
      return E::add(E::mul(differentiate(*f.lhs()), f.rhs()),
                    E::mul(f.lhs(), differentiate(*f.rhs())));
    case K::Div:
      // (u/v)' = (u'v - uv') / v^2
      return E::div(E::sub(E::mul(differentiate(*f.lhs()), f.rhs()),
                           E::mul(f.lhs(), differentiate(*f.rhs()))),
                    E::pow_int(f.rhs(), 2));
    case K::Neg: return E::neg(differentiate(*f.lhs()));
    case K::PowInt:
      return E::mul(E::mul(E::constant(Complex(f.exponent(), 0.0)),
                           E::pow_int(f.lhs(), f.exponent() - 1)),
                    differentiate(*f.lhs()));
    case K::Sin: return E::mul(E::apply(K::Cos, f.lhs()), differentiate(*f.lhs()));
    case K::Cos: return E::neg(E::mul(E::apply(K::Sin, f.lhs()), differentiate(*f.lhs())));
    case K::Exp: return E::mul(E::apply(K::Exp, f.lhs()), differentiate(*f.lhs()));
    case K::Sinh: return E::mul(E::apply(K::Cosh, f.lhs()), differentiate(*f.lhs()));
    case K::Cosh: return E::mul(E::apply(K::Sinh, f.lhs()), differentiate(*f.lhs()));
  }
  throw Error("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum class Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Type type;
  double number = 0.0;
  bool imaginary = false;  // literal carried an `i` suffix, e.g. `4i`
  bool integral = false;   // pure digits, usable as an exponent
  std::string ident;
  std::size_t offset = 0;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t pos = 0;
  const auto peek = [&](std::size_t k = 0) -> char {
    return pos + k < src.size() ? src[pos + k] : '\0';
  };
  while (pos < src.size()) {
    const char c = src[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      bool integral = true;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
      if (peek() == '.') {
        integral = false;
        ++pos;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
      }
      if (peek() == 'e' || peek() == 'E') {
        std::size_t save = pos;
        ++pos;
        if (peek() == '+' || peek() == '-') ++pos;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          integral = false;
          while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        } else {
          pos = save;  // `e` belongs to an identifier, not this literal
        }
      }
      double value = 0.0;
      const auto res = std::from_chars(src.data() + start, src.data() + pos, value);
      if (res.ec != std::errc()) throw SyntaxError("malformed numeric literal", start);
      Token t{Token::Type::Number, value, false, integral, {}, start};
      // `4i` is one imaginary literal as long as no identifier continues it.
      if (peek() == 'i' && !std::isalnum(static_cast<unsigned char>(peek(1))) && peek(1) != '_') {
        ++pos;
        t.imaginary = true;
        t.integral = false;
      }
      out.push_back(t);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos;
      out.push_back({Token::Type::Ident, 0.0, false, false,
                     std::string(src.substr(start, pos - start)), start});
      continue;
    }
    Token::Type type;
    switch (c) {
      case '+': type = Token::Type::Plus; break;
      case '-': type = Token::Type::Minus; break;
      case '*': type = Token::Type::Star; break;
      case '/': type = Token::Type::Slash; break;
      case '^': type = Token::Type::Caret; break;
      case '(': type = Token::Type::LParen; break;
      case ')': type = Token::Type::RParen; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
    }
    out.push_back({type, 0.0, false, false, {}, pos});
    ++pos;
  }
  out.push_back({Token::Type::End, 0.0, false, false, {}, src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    if (cur().type != Token::Type::End)
      throw SyntaxError("unexpected trailing input", cur().offset);
    return e;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Token::Type t) {
    if (cur().type != t) return false;
    ++pos_;
    return true;
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    for (;;) {
      if (accept(Token::Type::Plus)) {
        e = ExprNode::add(std::move(e), parse_term());
      } else if (accept(Token::Type::Minus)) {
        e = ExprNode::sub(std::move(e), parse_term());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_unary();
    for (;;) {
      if (accept(Token::Type::Star)) {
        e = ExprNode::mul(std::move(e), parse_unary());
      } else if (accept(Token::Type::Slash)) {
        e = ExprNode::div(std::move(e), parse_unary());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_unary() {
    if (accept(Token::Type::Minus)) return ExprNode::neg(parse_unary());
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (!accept(Token::Type::Caret)) return base;
    int sign = 1;
    if (accept(Token::Type::Minus)) sign = -1;
    const Token& t = cur();
    if (t.type != Token::Type::Number || !t.integral)
      throw SyntaxError("exponent must be an integer", t.offset);
    advance();
    return ExprNode::pow_int(std::move(base), sign * static_cast<int>(t.number));
  }

  ExprPtr parse_atom() {
    const Token& t = cur();
    switch (t.type) {
      case Token::Type::Number:
        advance();
        return ExprNode::constant(t.imaginary ? Complex(0.0, t.number) : Complex(t.number, 0.0));
      case Token::Type::LParen: {
        advance();
        ExprPtr e = parse_expr();
        if (!accept(Token::Type::RParen)) throw SyntaxError("expected ')'", cur().offset);
        return e;
      }
      case Token::Type::Ident: {
        advance();
        if (t.ident == "w") return ExprNode::var();
        if (t.ident == "i") return ExprNode::constant(Complex(0.0, 1.0));
        static const std::array<std::pair<std::string_view, ExprNode::Kind>, 5> kFunctions{{
            {"sin", ExprNode::Kind::Sin},
            {"cos", ExprNode::Kind::Cos},
            {"exp", ExprNode::Kind::Exp},
            {"sinh", ExprNode::Kind::Sinh},
            {"cosh", ExprNode::Kind::Cosh},
        }};
        for (const auto& [name, kind] : kFunctions) {
          if (t.ident == name) {
            if (!accept(Token::Type::LParen))
              throw SyntaxError("expected '(' after function name", cur().offset);
            ExprPtr arg = parse_expr();
            if (!accept(Token::Type::RParen)) throw SyntaxError("expected ')'", cur().offset);
            return ExprNode::apply(kind, std::move(arg));
          }
        }
        if (cur().type == Token::Type::LParen) throw DisallowedFunction(t.ident, t.offset);
        throw SyntaxError("unknown identifier '" + t.ident + "'", t.offset);
      }
      default:
        throw SyntaxError("expected a value", t.offset);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view source) { return Parser(lex(source)).run(); }

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Atom-level rendering; anything that could bind differently in context is
// wrapped in parentheses.
std::string format_complex(Complex c) {
  if (c.imag() == 0.0) {
    if (c.real() >= 0.0) return format_double(c.real());
    return "(" + format_double(c.real()) + ")";
  }
  if (c.real() == 0.0) {
    if (c.imag() == 1.0) return "i";
    if (c.imag() > 0.0) return format_double(c.imag()) + "i";
    return "(-" + format_double(-c.imag()) + "i)";
  }
  const std::string im = c.imag() >= 0.0 ? "+" + format_double(c.imag())
                                         : "-" + format_double(-c.imag());
  return "(" + format_double(c.real()) + im + "i)";
}

int precedence(ExprNode::Kind k) {
  using K = ExprNode::Kind;
  switch (k) {
    case K::Add:
    case K::Sub: return 1;
    case K::Mul:
    case K::Div: return 2;
    case K::Neg: return 3;
    case K::PowInt: return 4;
    default: return 5;  // atoms and function calls
  }
}

void print(const ExprNode& f, std::string& out);

void print_child(const ExprPtr& child, int min_prec, std::string& out) {
  if (precedence(child->kind()) < min_prec) {
    out += '(';
    print(*child, out);
    out += ')';
  } else {
    print(*child, out);
  }
}

void print(const ExprNode& f, std::string& out) {
  using K = ExprNode::Kind;
  switch (f.kind()) {
    case K::Var: out += 'w'; return;
    case K::Const: out += format_complex(f.value()); return;
    case K::Add:
      print_child(f.lhs(), 1, out);
      out += '+';
      print_child(f.rhs(), 2, out);
      return;
    case K::Sub:
      print_child(f.lhs(), 1, out);
      out += '-';
      print_child(f.rhs(), 2, out);
      return;
    case K::Mul:
      print_child(f.lhs(), 2, out);
      out += '*';
      print_child(f.rhs(), 3, out);
      return;
    case K::Div:
      print_child(f.lhs(), 2, out);
      out += '/';
      print_child(f.rhs(), 3, out);
      return;
    case K::Neg:
      out += '-';
      print_child(f.lhs(), 3, out);
      return;
    case K::PowInt:
      print_child(f.lhs(), 5, out);
      out += '^';
      out += std::to_string(f.exponent());
      return;
    case K::Sin: out += "sin("; break;
    case K::Cos: out += "cos("; break;
    case K::Exp: out += "exp("; break;
    case K::Sinh: out += "sinh("; break;
    case K::Cosh: out += "cosh("; break;
  }
  print(*f.lhs(), out);
  out += ')';
}

}  // namespace

std::string to_string(const ExprNode& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace minksurf::expr
