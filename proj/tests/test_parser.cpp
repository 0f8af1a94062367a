#include "doctest.h"
#include "support.hpp"

#include "logsplit/parser.hpp"
#include "logsplit/report.hpp"

#include "json.hpp"

using namespace logsplit;
using namespace testing_support;

namespace {
const FieldConfig Q = FieldConfig::rationals();
const FieldConfig QT = FieldConfig::rational_functions();
RatFun k(int m, long v) { return RatFun::constant(m, BaseElem(v)); }

RatFun eqn(const std::string &src, FieldConfig cfg = Q) { return lower(parse_equation(src), cfg); }
RatFun expr(const std::string &src, int m, FieldConfig cfg = Q) { return lower(*parse_expression(src, m), m, cfg); }

template <class E> E caught(const std::string &src) {
  try {
    (void)lower(parse_equation(src), Q);
  } catch (const E &e) {
    return e;
  }
  FAIL("no exception for " << src);
  throw std::logic_error("unreachable");
}

// Random expression text over x0..x{m-1} and t.
std::string random_expr(std::mt19937_64 &rng, int m, int depth) {
  if (depth == 0 || uniform(rng, 0, 3) == 0) {
    switch (uniform(rng, 0, 3)) {
    case 0:
      return std::to_string(uniform(rng, 0, 9));
    case 1:
      return "t";
    default:
      return "x" + std::to_string(uniform(rng, 0, m - 1));
    }
  }
  const std::string a = random_expr(rng, m, depth - 1);
  switch (uniform(rng, 0, 5)) {
  case 0:
    return "(" + a + " + " + random_expr(rng, m, depth - 1) + ")";
  case 1:
    return "(" + a + " - " + random_expr(rng, m, depth - 1) + ")";
  case 2:
    return a + "*" + random_expr(rng, m, depth - 1);
  case 3: {
    const std::string b = random_expr(rng, m, depth - 1);
    return a + "/(" + b + " + 11/7)";
  }
  case 4:
    return "(" + a + ")^" + std::to_string(uniform(rng, 0, 3));
  default:
    return "-" + a;
  }
}
} // namespace

TEST_CASE("equation examples") {
  auto eq = parse_equation("y' = y^2");
  CHECK(eq.order == 1);
  CHECK(lower(eq, Q) == x(1, 0) * x(1, 0));
  eq = parse_equation("y'' = y*y'");
  CHECK(eq.order == 2);
  CHECK(lower(eq, Q) == x(2, 0) * x(2, 1));
  eq = parse_equation("y' = y^2 - y/t");
  CHECK(eq.uses_t());
  CHECK(lower(eq, QT) == x(1, 0) * x(1, 0) - x(1, 0) / t(1));
  CHECK_THROWS_AS(parse_equation("y' = y''"), OrderViolation);
}

TEST_CASE("derivative notations and whitespace") {
  CHECK(eqn("y^(3) = y^(2) + y'' ") == k(3, 2) * x(3, 2));
  CHECK(eqn("y'''=y^(1)") == x(3, 1));
  CHECK(eqn("  y '\n'  =\ty ^ 2") == x(2, 0) * x(2, 0));
  CHECK(parse_equation("y^(7) = y^(6)").order == 7);
  // y^2 is a power, y^(2) a derivative
  CHECK(eqn("y''' = y^2 + y^(2)") == x(3, 0) * x(3, 0) + x(3, 2));
  CHECK(eqn("y''' = (y)^(2)") == x(3, 0) * x(3, 0));
}

TEST_CASE("precedence and associativity") {
  const RatFun y = x(1, 0);
  CHECK(eqn("y' = -y^2") == -(y * y));
  CHECK(eqn("y' = 1 - 2*y + 3") == k(1, 4) - k(1, 2) * y);
  CHECK(eqn("y' = 12/3/2") == k(1, 2));
  CHECK(eqn("y' = 2*y/4*y") == y * y / k(1, 2));
  CHECK(eqn("y' = y^-2") == k(1, 1) / (y * y));
  CHECK(eqn("y' = --y") == y);
  CHECK(eqn("y' = 0.25*y") == y / k(1, 4));
  CHECK(eqn("y' = (y + 1)^0") == k(1, 1));
}

TEST_CASE("syntax errors carry line and column") {
  auto e = caught<ParseError>("y' = y +");
  CHECK(e.line() == 1);
  CHECK(e.column() == 9);
  e = caught<ParseError>("y' =\n  (y + 2");
  CHECK(e.line() == 2);
  CHECK(e.column() == 9);
  e = caught<ParseError>("y' = 2y");
  CHECK(e.column() == 7);
  e = caught<ParseError>("y' = sin(y)");
  CHECK(e.column() == 6);
  e = caught<ParseError>("y = 1");
  CHECK(e.column() == 1);
  e = caught<ParseError>("y' = y/0");
  CHECK(e.column() == 7);
  e = caught<ParseError>("y' = y^2^2");
  CHECK(e.column() == 9);
  CHECK_THROWS_AS(parse_equation("y' = y $ 2"), ParseError);
  CHECK_THROWS_AS(parse_equation("y' = x0"), ParseError);
  CHECK_THROWS_AS(parse_equation("= y"), ParseError);
  CHECK_THROWS_AS(parse_equation("y' = y^1001"), ParseError);
}

TEST_CASE("order and field violations") {
  const auto ov = caught<OrderViolation>("y'' = y + y^(2)");
  CHECK(ov.column() == 11);
  const auto fv = caught<FieldViolation>("y' = t*y");
  CHECK(fv.column() == 6);
  CHECK_THROWS_AS(parse_expression("x2 + 1", 2), OrderViolation);
  CHECK_THROWS_AS(lower(*parse_expression("t*x0", 1), 1, Q), FieldViolation);
}

TEST_CASE("witness expressions use x-variables") {
  CHECK(expr("x1 - x0^2/3", 2) == x(2, 1) - x(2, 0) * x(2, 0) / k(2, 3));
  CHECK(expr("t*x0", 1, QT) == t(1) * x(1, 0));
  CHECK_THROWS_AS(parse_expression("y'", 1), ParseError);
  CHECK(lower_base(*parse_expression("1/t + 2", 1), QT) == BaseElem(1) / BaseElem::t() + BaseElem(2));
  CHECK(lower_base(*parse_expression("-3/4", 3), Q) == BaseElem(mpq_class(-3, 4)));
  CHECK_THROWS_AS(lower_base(*parse_expression("x0", 1), Q), ParseError);
  // x-variables that cancel still leave a base field element
  CHECK(lower_base(*parse_expression("x0 - x0 + 5", 1), Q) == BaseElem(5));
}

TEST_CASE("printing and re-parsing returns the same value") {
  std::mt19937_64 rng(47);
  int checked = 0;
  while (checked < 100) {
    const int m = static_cast<int>(uniform(rng, 1, 3));
    const std::string src = random_expr(rng, m, 3);
    RatFun r;
    try {
      r = expr(src, m, QT);
    } catch (const ParseError &) {
      continue; // a random denominator vanished
    }
    const RatFun back = expr(r.to_string(), m, QT);
    CHECK_MESSAGE(back == r, src << " printed as " << r.to_string());
    ++checked;
  }
}

TEST_CASE("search reports render with the exact JSON keys") {
  SearchReport rep;
  rep.outcome = Outcome::Found;
  rep.witness = Witness{x(1, 0), BaseElem(mpq_class(1, 2)), 2};
  rep.bounds = {3, 1, 3, 2};
  rep.darboux_pairs.push_back({x(1, 0).num(), x(1, 0).num()});
  rep.timing_ms = 4;
  const auto j = nlohmann::ordered_json::parse(render_json(rep));
  std::vector<std::string> keys;
  for (const auto &[key, value] : j.items())
    keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"outcome", "witness", "bounds", "darboux_pairs", "timing_ms"});
  CHECK(j["outcome"] == "found");
  CHECK(j["witness"]["h"] == "x0");
  CHECK(j["witness"]["e"] == "1/2");
  CHECK(j["witness"]["k"] == 2);
  CHECK(j["bounds"]["deg_h"] == 3);
  CHECK(j["bounds"]["deg_cofactor"] == 1);
  CHECK(j["bounds"]["kmax"] == 3);
  CHECK(j["bounds"]["e_tdeg"] == 2);
  CHECK(j["darboux_pairs"][0]["p"] == "x0");
  CHECK(j["darboux_pairs"][0]["cofactor"] == "x0");
  CHECK(j["timing_ms"] == 4);
  CHECK(render_text(rep).find("outcome: found") != std::string::npos);

  rep.outcome = Outcome::NoWitnessAnyDegree;
  rep.witness.reset();
  const auto j2 = nlohmann::json::parse(render_json(rep, -1));
  CHECK(j2["outcome"] == "no_witness_any_degree");
  CHECK(j2["witness"].is_null());
  CHECK(outcome_key(Outcome::ExhaustedBounds) == "exhausted");
}

TEST_CASE("polynomials print in graded-lex order with p/q rationals") {
  const RatFun x0 = x(2, 0), x1 = x(2, 1);
  CHECK((x0 + x1 * x1 + x0 * x1 / k(2, 3) + k(2, 5)).to_string() == "x1^2 + 1/3*x0*x1 + x0 + 5");
}
