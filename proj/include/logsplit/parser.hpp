#pragma once

#include "logsplit/ratfun.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace logsplit {

/// Malformed input; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &msg, int line, int col);
  int line() const { return line_; }
  int column() const { return col_; }

private:
  int line_;
  int col_;
};

/// The right side refers to y^(j) with j >= m.
class OrderViolation : public ParseError {
public:
  using ParseError::ParseError;
};

/// t occurs although the base field is Q.
class FieldViolation : public ParseError {
public:
  using ParseError::ParseError;
};

struct Expr {
  enum Kind { Number, Deriv, Var, T, Neg, Add, Sub, Mul, Div, Pow } kind = Number;
  mpq_class value;
  /// derivative or variable index for Deriv / Var, exponent for Pow
  int index = 0;
  int line = 1;
  int col = 1;
  std::vector<std::unique_ptr<Expr>> args;

  bool uses_t() const;
};

struct EquationAst {
  /// m, the order of the left-hand side
  int order = 0;
  std::unique_ptr<Expr> rhs;

  bool uses_t() const { return rhs->uses_t(); }
};

/// Parses "y^(m) = f" where f uses y, y', ..., y^(m-1), t and rationals.
EquationAst parse_equation(const std::string &src);

/// Parses an expression over x0..x{m-1} and t, as used for --h and --e.
std::unique_ptr<Expr> parse_expression(const std::string &src, int m);

/// Lowers to F(x0..x{m-1}); y^(i) becomes x_i. Throws FieldViolation when t
/// occurs under Q and ParseError on division by zero.
RatFun lower(const Expr &e, int m, FieldConfig cfg);
inline RatFun lower(const EquationAst &eq, FieldConfig cfg) { return lower(*eq.rhs, eq.order, cfg); }

/// Lowers an expression that must not involve any x_i.
BaseElem lower_base(const Expr &e, FieldConfig cfg);

} // namespace logsplit
