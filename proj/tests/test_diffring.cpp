#include "doctest.h"
#include "support.hpp"

#include "logsplit/witness.hpp"

using namespace logsplit;
using namespace testing_support;

namespace {
const FieldConfig Q = FieldConfig::rationals();
const FieldConfig QT = FieldConfig::rational_functions();
RatFun k(int m, long v) { return RatFun::constant(m, BaseElem(v)); }
} // namespace

TEST_CASE("rational function arithmetic examples") {
  const RatFun x0 = x(2, 0), x1 = x(2, 1);
  CHECK(rf_mul(x0 / x1, x1) == x0);
  CHECK(rf_pow(x0, 0) == k(2, 1));
  CHECK(rf_add(x0, -x0).is_zero());
  CHECK(rf_neg(x0) == k(2, -1) * x0);
  CHECK(rf_inv(x0 / x1) == x1 / x0);
  CHECK(rf_pow(x0, -2) == k(2, 1) / (x0 * x0));
  CHECK_THROWS_AS(rf_inv(RatFun(2)), std::invalid_argument);
  CHECK_THROWS_AS(rf_pow(RatFun(2), -1), std::invalid_argument);
  CHECK_THROWS_AS(x0 / RatFun(2), std::invalid_argument);
}

TEST_CASE("normalization makes the greatest denominator coefficient 1") {
  const RatFun x0 = x(2, 0), x1 = x(2, 1);
  const RatFun r = (k(2, 2) * x0) / (k(2, 4) * x1 * x1 + k(2, 6) * x0);
  CHECK(r.den().lead_coeff() == BaseElem(1));
  CHECK(r == (k(2, 1) / k(2, 2) * x0) / (x1 * x1 + k(2, 3) / k(2, 2) * x0));
  // common factors cancel
  const RatFun s = ((x0 + x1) * (x0 - x1)) / ((x0 + x1) * x1);
  CHECK(s == (x0 - x1) / x1);
  // grlex puts x1 above x0
  CHECK(s.to_string() == "(-x1 + x0)/x1");
}

TEST_CASE("partial derivative examples") {
  const RatFun x0 = x(2, 0), x1 = x(2, 1);
  CHECK(partial(x0 * x1 * x1, 1) == k(2, 2) * x0 * x1);
  CHECK(partial(k(2, 1) / x0, 0) == k(2, -1) / (x0 * x0));
  CHECK(partial(t(1) * x(1, 0), 0) == t(1));
  CHECK_THROWS_AS(partial(x0, 2), std::invalid_argument);
  CHECK_THROWS_AS(partial(x0, -1), std::invalid_argument);
}

TEST_CASE("coefficient derivation examples") {
  const RatFun x0 = x(2, 0), x1 = x(2, 1);
  CHECK(delta_F(t(2) * x0 + x1 * x1, QT) == x0);
  CHECK(delta_F(x(1, 0) * x(1, 0) * x(1, 0), Q).is_zero());
  CHECK(delta_F(x(1, 0) / t(1), QT) == k(1, -1) * x(1, 0) / (t(1) * t(1)));
}

TEST_CASE("Lie derivative examples") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    const RatFun f = random_ratfun(rng, 1, QT);
    CHECK(lie_derivative(x(1, 0), f, QT) == f);
  }
  const RatFun x0 = x(2, 0), x1 = x(2, 1);
  CHECK(lie_derivative(x1, x0 * x1, Q) == x0 * x1);
  CHECK(lie_derivative(x0, x0 * x1, Q) == x1);
  const RatFun y = x(1, 0);
  CHECK(lie_derivative(t(1) * y, y * y, QT) == t(1) * y * y + y);
  CHECK_THROWS_AS(lie_derivative(x0, y, Q), std::invalid_argument);
}

TEST_CASE("derivation laws on random rational functions") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 100; ++n) {
    const int m = 2;
    const RatFun a = random_ratfun(rng, m, QT), b = random_ratfun(rng, m, QT);
    for (int i = 0; i < m; ++i)
      CHECK(partial(a * b, i) == a * partial(b, i) + b * partial(a, i));
    CHECK(delta_F(a * b, QT) == a * delta_F(b, QT) + b * delta_F(a, QT));
    CHECK(partial(partial(a, 0), 1) == partial(partial(a, 1), 0));
    CHECK(delta_F(partial(a, 0), QT) == partial(delta_F(a, QT), 0));
    CHECK(delta_F(partial(b, 1), QT) == partial(delta_F(b, QT), 1));
  }
}

TEST_CASE("the Lie derivative is a derivation") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 40; ++n) {
    const FieldConfig cfg = n % 2 ? QT : Q;
    const int m = 1 + n % 3;
    const RatFun f = random_ratfun(rng, m, cfg);
    const RatFun a = random_ratfun(rng, m, cfg), b = random_ratfun(rng, m, cfg);
    CHECK(lie_derivative(a * b, f, cfg) == a * lie_derivative(b, f, cfg) + b * lie_derivative(a, f, cfg));
    CHECK(lie_derivative(a + b, f, cfg) == lie_derivative(a, f, cfg) + lie_derivative(b, f, cfg));
  }
}

TEST_CASE("valuation examples") {
  const RatFun x0 = x(2, 0), x1 = x(2, 1);
  CHECK(valuation(x0 * x0 + x1, 0) == -2);
  CHECK(valuation(k(2, 1) / x0, 0) == 1);
  const RatFun cube = x0 * x0 * x0;
  CHECK(valuation(cube, 0) == -3);
  CHECK(valuation(partial(cube, 0), 0) == -2);
  CHECK(valuation(x1, 0) == 0);
  CHECK_THROWS_AS(valuation(RatFun(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(valuation(x0, 5), std::invalid_argument);
}

TEST_CASE("valuation laws on random values") {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 200; ++n) {
    const FieldConfig cfg = n % 2 ? QT : Q;
    const RatFun a = random_nonzero_ratfun(rng, 2, cfg), b = random_nonzero_ratfun(rng, 2, cfg);
    for (int i = 0; i < 2; ++i) {
      CHECK(valuation(a * b, i) == valuation(a, i) + valuation(b, i));
      if (!(a + b).is_zero())
        CHECK(valuation(a + b, i) >= std::min(valuation(a, i), valuation(b, i)));
      for (int j = 0; j < 2; ++j) {
        const RatFun d = partial(a, j);
        if (!d.is_zero())
          CHECK(valuation(d, i) >= valuation(a, i));
      }
      const RatFun d = delta_F(a, cfg);
      if (!d.is_zero())
        CHECK(valuation(d, i) >= valuation(a, i));
    }
  }
}

TEST_CASE("leading part examples and reconstruction") {
  const RatFun x0 = x(2, 0), x1 = x(2, 1);
  auto lp = leading_part(x0 * x0 + x1, 0);
  CHECK(lp.coeff == k(2, 1));
  CHECK(lp.val == -2);
  lp = leading_part(k(2, 3) * x0 * x1 + x1, 0);
  CHECK(lp.coeff == k(2, 3) * x1);
  CHECK(lp.val == -1);
  lp = leading_part(x1 * x1, 0);
  CHECK(lp.coeff == x1 * x1);
  CHECK(lp.val == 0);
  CHECK_THROWS_AS(leading_part(RatFun(2), 0), std::invalid_argument);

  std::mt19937_64 rng(17);
  for (int n = 0; n < 60; ++n) {
    const RatFun h = random_nonzero_ratfun(rng, 2, n % 2 ? QT : Q);
    for (int i = 0; i < 2; ++i) {
      const auto p = leading_part(h, i);
      CHECK(p.val == valuation(h, i));
      CHECK(valuation(p.coeff, i) == 0);
      CHECK(partial(p.coeff, i).is_zero());
      const RatFun rest = h - p.coeff * rf_pow(x(2, i), -p.val);
      if (!rest.is_zero())
        CHECK(valuation(rest, i) > p.val);
    }
  }
}

TEST_CASE("clearing denominators") {
  const RatFun x0 = x(2, 0), x1 = x(2, 1);
  auto [p, q] = clear_denominators(x0 * x0);
  CHECK(RatFun(p) == x0 * x0);
  CHECK(q.is_constant());
  std::tie(p, q) = clear_denominators(x0 / x1);
  CHECK(RatFun(p) == x0);
  CHECK(RatFun(q) == x1);
  std::tie(p, q) = clear_denominators(x0 * x0 - x0);
  CHECK(RatFun(p) == x0 * x0 - x0);
  CHECK(q == MultiPoly(2, BaseElem(1)));
}

TEST_CASE("multivariate gcd") {
  std::mt19937_64 rng(19);
  for (int n = 0; n < 30; ++n) {
    const FieldConfig cfg = n % 2 ? QT : Q;
    const MultiPoly g = random_poly(rng, 2, 2, cfg, 2);
    const MultiPoly a = random_poly(rng, 2, 2, cfg, 3), b = random_poly(rng, 2, 2, cfg, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero())
      continue;
    const MultiPoly d = poly_gcd(g * a, g * b);
    CHECK(d.divides(g * a));
    CHECK(d.divides(g * b));
    CHECK(g.divides(d));
  }
}
