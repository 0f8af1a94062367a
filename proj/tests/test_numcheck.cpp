#include "doctest.h"
#include "support.hpp"

#include "logsplit/numcheck.hpp"

#include <cmath>

using namespace logsplit;
using namespace testing_support;

namespace {
const FieldConfig Q = FieldConfig::rationals();
const FieldConfig QT = FieldConfig::rational_functions();
} // namespace

TEST_CASE("RK4 reproduces the closed form of y' = y^2") {
  const RatFun y = x(1, 0);
  const auto tr = integrate_system(y * y, {-1.0, 1.0}, 1e-3, 0.5, Q);
  CHECK_FALSE(tr.aborted);
  REQUIRE(tr.t_grid.size() == 501);
  double err = 0;
  for (std::size_t i = 0; i < tr.t_grid.size(); ++i)
    err = std::max(err, std::fabs(tr.y_states[i][0] + 1.0 / (1.0 + tr.t_grid[i])));
  CHECK(err < 1e-8);
  // x' = y x gives x = 1/(1 + t)
  CHECK(tr.x_values.back() == doctest::Approx(1.0 / 1.5).epsilon(1e-9));
}

TEST_CASE("zero right side keeps x constant") {
  const auto tr = integrate_system(RatFun(1), {0.0, 1.0}, 1e-3, 0.5, Q);
  for (double v : tr.x_values)
    CHECK(v == 1.0);
}

TEST_CASE("second order system agrees with a half-step run") {
  const RatFun f = x(2, 0) * x(2, 1);
  const auto a = integrate_system(f, {1.0, 1.0, 1.0}, 1e-3, 0.5, Q);
  const auto b = integrate_system(f, {1.0, 1.0, 1.0}, 5e-4, 0.5, Q);
  CHECK_FALSE(a.aborted);
  CHECK_FALSE(b.aborted);
  CHECK(std::fabs(a.y_states.back()[0] - b.y_states.back()[0]) < 1e-6);
  CHECK(std::fabs(a.y_states.back()[1] - b.y_states.back()[1]) < 1e-6);
  CHECK(std::fabs(a.x_values.back() - b.x_values.back()) < 1e-6);
}

TEST_CASE("integration aborts at blow-up and rejects bad input") {
  const RatFun y = x(1, 0);
  // y' = y^2 from y = 10 blows up at t = 0.1
  const auto tr = integrate_system(y * y, {10.0, 1.0}, 1e-3, 0.5, Q);
  CHECK(tr.aborted);
  CHECK(tr.t_grid.back() < 0.1 + 1e-9);
  CHECK_THROWS_AS(integrate_system(RatFun::constant(1, BaseElem(1)) / y, {0.0, 1.0}, 1e-3, 0.5, Q), std::invalid_argument);
  CHECK_THROWS_AS(integrate_system(y, {1.0, 0.0}, 1e-3, 0.5, Q), std::invalid_argument);
  CHECK_THROWS_AS(integrate_system(y, {1.0}, 1e-3, 0.5, Q), std::invalid_argument);
  CHECK_THROWS_AS(integrate_system(y, {1.0, 1.0}, 0.0, 0.5, Q), std::invalid_argument);
  CHECK_THROWS_AS(integrate_system(y * t(1), {1.0, 1.0}, 1e-3, 0.5, Q), std::invalid_argument);
}

TEST_CASE("valid witnesses pass the numeric check") {
  const RatFun y = x(1, 0);
  auto r = check_witness_numeric(y * y, {y, BaseElem(), 1}, 5, Q);
  CHECK(r.pass);
  CHECK(r.max_drift < 1e-6);
  CHECK(r.trials == 5);
  r = check_witness_numeric(x(2, 0) * x(2, 1), {x(2, 1), BaseElem(), 1}, 5, Q);
  CHECK(r.pass);
  r = check_witness_numeric(y * y - y / t(1), {t(1) * y, BaseElem(), 1}, 5, QT);
  CHECK(r.pass);
  r = check_witness_numeric(y * y - y / t(1), {y, BaseElem(1) / BaseElem::t(), 1}, 5, QT);
  CHECK(r.pass);
}

TEST_CASE("perturbed witnesses fail the numeric check") {
  const RatFun y = x(1, 0);
  CHECK_FALSE(check_witness_numeric(y * y, {y, BaseElem(1), 1}, 5, Q).pass);
  CHECK_FALSE(check_witness_numeric(y * y, {y, BaseElem(), 2}, 5, Q).pass);
  CHECK_FALSE(check_witness_numeric(y * y, {y + RatFun::constant(1, BaseElem(1)), BaseElem(), 1}, 5, Q).pass);
  CHECK_FALSE(check_witness_numeric(x(2, 0) * x(2, 1), {x(2, 1) + x(2, 0), BaseElem(), 1}, 5, Q).pass);
}

TEST_CASE("halving the step does not inflate the drift") {
  const RatFun y = x(1, 0);
  const Witness w{y - RatFun::constant(1, BaseElem(1)), BaseElem(), 1};
  const RatFun f = y * y - y;
  NumericOptions half;
  half.step = 5e-4;
  const auto a = check_witness_numeric(f, w, 5, Q);
  const auto b = check_witness_numeric(f, w, 5, Q, half);
  CHECK(a.pass);
  CHECK(b.pass);
  // drift sits at the rounding floor; allow a factor 2 plus that floor
  CHECK(b.max_drift <= 2 * a.max_drift + 1e-13);
}

TEST_CASE("singular instances are reported") {
  const RatFun y = x(1, 0);
  // |h| stays below the 1e-9 rejection threshold on the whole sampling box
  const RatFun tiny = RatFun::constant(1, BaseElem(mpq_class(mpz_class(1), mpz_class("1000000000000")))) * y;
  CHECK_THROWS_AS(check_witness_numeric(y * y, {tiny, BaseElem(), 1}, 3, Q), SingularInstance);
  CHECK_THROWS_AS(check_witness_numeric(y, {RatFun(1), BaseElem(), 1}, 3, Q), std::invalid_argument);
  CHECK_THROWS_AS(check_witness_numeric(y, {y, BaseElem(), 0}, 3, Q), std::invalid_argument);
}

TEST_CASE("trajectories that blow up are scored on their resolved part") {
  // y' = 2y^2 + y/2 blows up before t = 0.25 for every draw in [1, 2]
  const RatFun y = x(1, 0);
  const RatFun f = RatFun::constant(1, BaseElem(2)) * y * y + y / RatFun::constant(1, BaseElem(2));
  const auto good = check_witness_numeric(f, {y, BaseElem(mpq_class(-1, 2)), 2}, 5, Q);
  CHECK(good.pass);
  CHECK(good.truncated == 5);
  CHECK(good.max_drift < 1e-6);
  CHECK_FALSE(check_witness_numeric(f, {y, BaseElem(mpq_class(1, 2)), 2}, 5, Q).pass);
  CHECK_FALSE(check_witness_numeric(f, {y, BaseElem(mpq_class(-1, 2)), 3}, 5, Q).pass);

  // no trajectory survives a 0.4 span, so every draw is rejected
  NumericOptions strict;
  strict.min_span = 0.4;
  CHECK_THROWS_AS(check_witness_numeric(f, {y, BaseElem(mpq_class(-1, 2)), 2}, 5, Q, strict), SingularInstance);
}
