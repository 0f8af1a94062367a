#include "logsplit/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace logsplit {

ParseError::ParseError(const std::string &msg, int line, int col)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg),
      line_(line), col_(col) {}

bool Expr::uses_t() const {
  if (kind == T)
    return true;
  for (const auto &a : args)
    if (a->uses_t())
      return true;
  return false;
}

namespace {

constexpr int kMaxExponent = 1000;

struct Token {
  enum Kind { Num, Y, X, T, Quote, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, End } kind;
  mpq_class value;
  int index = 0;
  int line = 1;
  int col = 1;
  std::string text;
};

std::vector<Token> tokenize(const std::string &src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok{Token::End, 0, 0, line, col, std::string(1, c)};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      std::string digits = src.substr(i, j - i);
      std::string scale = "1";
      if (j < src.size() && src[j] == '.') {
        std::size_t k = j + 1;
        while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k])))
          ++k;
        if (k == j + 1)
          throw ParseError("expected digits after '.'", line, col + static_cast<int>(k - i));
        digits += src.substr(j + 1, k - j - 1);
        scale += std::string(k - j - 1, '0');
        j = k;
      }
      tok.kind = Token::Num;
      tok.value = mpq_class(mpz_class(digits, 10), mpz_class(scale, 10));
      tok.value.canonicalize();
      tok.text = src.substr(i, j - i);
      out.push_back(tok);
      advance(j - i);
      continue;
    }
    if (c == 'x' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
      std::size_t j = i + 1;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      if (j - i - 1 > 6)
        throw ParseError("variable index too large", line, col);
      tok.kind = Token::X;
      tok.index = std::stoi(src.substr(i + 1, j - i - 1));
      tok.text = src.substr(i, j - i);
      out.push_back(tok);
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      const std::string word = src.substr(i, j - i);
      if (word == "y")
        tok.kind = Token::Y;
      else if (word == "t")
        tok.kind = Token::T;
      else
        throw ParseError("unknown identifier '" + word + "'", line, col);
      tok.text = word;
      out.push_back(tok);
      advance(j - i);
      continue;
    }
    switch (c) {
    case '\'': tok.kind = Token::Quote; break;
    case '+': tok.kind = Token::Plus; break;
    case '-': tok.kind = Token::Minus; break;
    case '*': tok.kind = Token::Star; break;
    case '/': tok.kind = Token::Slash; break;
    case '^': tok.kind = Token::Caret; break;
    case '(': tok.kind = Token::LParen; break;
    case ')': tok.kind = Token::RParen; break;
    case '=': tok.kind = Token::Equals; break;
    default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(tok);
    advance(1);
  }
  out.push_back(Token{Token::End, 0, 0, line, col, "end of input"});
  return out;
}

class Parser {
public:
  // m < 0: equation mode, y-derivatives allowed; otherwise x0..x{m-1}.
  Parser(std::vector<Token> toks, int m) : toks_(std::move(toks)), m_(m) {}

  EquationAst equation() {
    const Token &start = peek();
    if (start.kind != Token::Y)
      fail("expected y' or y^(m) on the left side");
    EquationAst eq;
    eq.order = derivative_index();
    if (eq.order < 1)
      throw ParseError("the left side must be a derivative of order at least 1", start.line, start.col);
    expect(Token::Equals, "'='");
    m_ = eq.order;
    eq.rhs = expr();
    expect(Token::End, "an operator or end of input");
    return eq;
  }

  std::unique_ptr<Expr> expression() {
    auto e = expr();
    expect(Token::End, "an operator or end of input");
    return e;
  }

  void set_equation_mode() { equation_mode_ = true; }

private:
  const Token &peek() const { return toks_[pos_]; }
  const Token &take() { return toks_[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k)
      return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(what + ", found '" + peek().text + "'", peek().line, peek().col);
  }
  void expect(Token::Kind k, const std::string &what) {
    if (!accept(k))
      fail("expected " + what);
  }

  static std::unique_ptr<Expr> node(Expr::Kind k, const Token &at) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->line = at.line;
    e->col = at.col;
    return e;
  }
  static std::unique_ptr<Expr> binary(Expr::Kind k, const Token &at, std::unique_ptr<Expr> a,
                                      std::unique_ptr<Expr> b) {
    auto e = node(k, at);
    e->args.push_back(std::move(a));
    e->args.push_back(std::move(b));
    return e;
  }

  long integer() {
    const Token &t = peek();
    if (t.kind != Token::Num || t.value.get_den() != 1)
      fail("expected an integer");
    if (t.value.get_num() > kMaxExponent)
      throw ParseError("integer too large (limit " + std::to_string(kMaxExponent) + ")", t.line, t.col);
    take();
    return t.value.get_num().get_si();
  }

  // After the 'y' token: quotes, or ^(k).
  int derivative_index() {
    take();
    int n = 0;
    while (accept(Token::Quote))
      ++n;
    if (n == 0 && peek().kind == Token::Caret && toks_[pos_ + 1].kind == Token::LParen) {
      pos_ += 2;
      n = static_cast<int>(integer());
      expect(Token::RParen, "')'");
    }
    return n;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    for (;;) {
      const Token &op = peek();
      if (accept(Token::Plus))
        lhs = binary(Expr::Add, op, std::move(lhs), term());
      else if (accept(Token::Minus))
        lhs = binary(Expr::Sub, op, std::move(lhs), term());
      else
        return lhs;
    }
  }

  std::unique_ptr<Expr> term() {
    auto lhs = unary();
    for (;;) {
      const Token &op = peek();
      if (accept(Token::Star))
        lhs = binary(Expr::Mul, op, std::move(lhs), unary());
      else if (accept(Token::Slash))
        lhs = binary(Expr::Div, op, std::move(lhs), unary());
      else
        return lhs;
    }
  }

  std::unique_ptr<Expr> unary() {
    const Token &op = peek();
    if (accept(Token::Minus)) {
      auto e = node(Expr::Neg, op);
      e->args.push_back(unary());
      return e;
    }
    if (accept(Token::Plus))
      return unary();
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = atom();
    const Token &op = peek();
    if (!accept(Token::Caret))
      return base;
    const bool paren = accept(Token::LParen);
    const bool neg = accept(Token::Minus);
    const long n = integer();
    if (paren)
      expect(Token::RParen, "')'");
    auto e = node(Expr::Pow, op);
    e->index = static_cast<int>(neg ? -n : n);
    e->args.push_back(std::move(base));
    if (peek().kind == Token::Caret)
      fail("chained powers need parentheses");
    return e;
  }

  std::unique_ptr<Expr> atom() {
    const Token &t = peek();
    switch (t.kind) {
    case Token::Num: {
      auto e = node(Expr::Number, t);
      e->value = t.value;
      take();
      return e;
    }
    case Token::T:
      take();
      return node(Expr::T, t);
    case Token::Y: {
      if (!equation_mode_)
        fail("use x0, x1, ... instead of y-derivatives here");
      auto e = node(Expr::Deriv, t);
      e->index = derivative_index();
      if (e->index >= m_)
        throw OrderViolation("y^(" + std::to_string(e->index) + ") on the right side of an order-" +
                                 std::to_string(m_) + " equation",
                             t.line, t.col);
      return e;
    }
    case Token::X: {
      if (equation_mode_)
        fail("the equation is written in y, y', ...; x-variables are not allowed");
      if (t.index >= m_)
        throw OrderViolation("x" + std::to_string(t.index) + " exceeds the order " + std::to_string(m_),
                             t.line, t.col);
      auto e = node(Expr::Var, t);
      e->index = t.index;
      take();
      return e;
    }
    case Token::LParen: {
      take();
      auto e = expr();
      expect(Token::RParen, "')'");
      return e;
    }
    default:
      fail("expected a number, variable or '('");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int m_;
  bool equation_mode_ = false;
};

} // namespace

EquationAst parse_equation(const std::string &src) {
  Parser p(tokenize(src), -1);
  p.set_equation_mode();
  return p.equation();
}

std::unique_ptr<Expr> parse_expression(const std::string &src, int m) {
  if (m < 1)
    throw std::invalid_argument("parse_expression: order must be positive");
  return Parser(tokenize(src), m).expression();
}

RatFun lower(const Expr &e, int m, FieldConfig cfg) {
  switch (e.kind) {
  case Expr::Number:
    return RatFun::constant(m, BaseElem(e.value));
  case Expr::T:
    if (!cfg.has_t())
      throw FieldViolation("t is not allowed over the base field Q", e.line, e.col);
    return RatFun::constant(m, BaseElem::t());
  case Expr::Deriv:
  case Expr::Var:
    return RatFun::variable(m, e.index);
  case Expr::Neg:
    return -lower(*e.args[0], m, cfg);
  case Expr::Add:
    return lower(*e.args[0], m, cfg) + lower(*e.args[1], m, cfg);
  case Expr::Sub:
    return lower(*e.args[0], m, cfg) - lower(*e.args[1], m, cfg);
  case Expr::Mul:
    return lower(*e.args[0], m, cfg) * lower(*e.args[1], m, cfg);
  case Expr::Div: {
    const RatFun d = lower(*e.args[1], m, cfg);
    if (d.is_zero())
      throw ParseError("division by zero", e.line, e.col);
    return lower(*e.args[0], m, cfg) / d;
  }
  case Expr::Pow: {
    const RatFun b = lower(*e.args[0], m, cfg);
    if (e.index < 0 && b.is_zero())
      throw ParseError("zero raised to a negative power", e.line, e.col);
    return b.pow(e.index);
  }
  }
  throw std::logic_error("lower: bad node");
}

namespace {
int variables_needed(const Expr &e) {
  int n = (e.kind == Expr::Var || e.kind == Expr::Deriv) ? e.index + 1 : 1;
  for (const auto &a : e.args)
    n = std::max(n, variables_needed(*a));
  return n;
}
} // namespace

BaseElem lower_base(const Expr &e, FieldConfig cfg) {
  const RatFun r = lower(e, variables_needed(e), cfg);
  if (!r.num().is_constant() || !r.den().is_constant())
    throw ParseError("expected an element of the base field (no x-variables)", e.line, e.col);
  return r.is_zero() ? BaseElem() : r.num().lead_coeff() / r.den().lead_coeff();
}

} // namespace logsplit
