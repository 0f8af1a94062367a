#include "logsplit/frontend.hpp"

#include <regex>

namespace logsplit {

namespace {

int highest_variable(const Expr &x) {
  int n = x.kind == Expr::Var ? x.index : -1;
  for (const auto &a : x.args)
    n = std::max(n, highest_variable(*a));
  return n;
}

std::string derivative(int i) {
  return i <= 3 ? "y" + std::string(static_cast<std::size_t>(i), '\'') : "y^(" + std::to_string(i) + ")";
}

} // namespace

Problem load_problem(const ProblemText &in, bool need_equation, bool need_witness) {
  Problem p;
  std::optional<EquationAst> eq;
  if (!in.equation.empty()) {
    std::string src = in.equation;
    if (!need_equation && src.find('=') == std::string::npos)
      src += " = 0";
    eq = parse_equation(src);
    p.m = eq->order;
  } else if (need_equation) {
    throw std::invalid_argument("an equation is required");
  }
  std::unique_ptr<Expr> hx, ex;
  if (need_witness) {
    if (in.h.empty())
      throw std::invalid_argument("h is required");
    if (p.m == 0) {
      p.m = highest_variable(*parse_expression(in.h, 1000000)) + 1;
      if (p.m == 0)
        throw DegenerateAnsatz("h must involve some x_i");
    }
    hx = parse_expression(in.h, p.m);
    ex = parse_expression(in.e, p.m);
  }
  const bool uses_t = (eq && eq->uses_t()) || (hx && hx->uses_t()) || (ex && ex->uses_t());
  if (in.field == "Q")
    p.cfg = FieldConfig::rationals();
  else if (in.field == "Qt")
    p.cfg = FieldConfig::rational_functions();
  else if (in.field == "auto")
    p.cfg = uses_t ? FieldConfig::rational_functions() : FieldConfig::rationals();
  else
    throw std::invalid_argument("field must be Q, Qt or auto");
  if (eq && need_equation)
    p.f = lower(*eq, p.cfg);
  if (need_witness) {
    p.h = lower(*hx, p.m, p.cfg);
    p.e = lower_base(*ex, p.cfg);
  }
  return p;
}

std::string in_y_notation(const std::string &s) {
  static const std::regex var("x([0-9]+)");
  std::string out;
  std::size_t last = 0;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), var); it != std::sregex_iterator(); ++it) {
    out += s.substr(last, static_cast<std::size_t>(it->position()) - last);
    out += derivative(std::stoi((*it)[1]));
    last = static_cast<std::size_t>(it->position() + it->length());
  }
  return out + s.substr(last);
}

std::string equation_text(int m, const RatFun &f) { return derivative(m) + " = " + in_y_notation(f.to_string()); }

} // namespace logsplit
