#include "doctest.h"
#include "support.hpp"

#include "logsplit/witness.hpp"

#include <algorithm>

using namespace logsplit;
using namespace testing_support;

namespace {
const FieldConfig Q = FieldConfig::rationals();
const FieldConfig QT = FieldConfig::rational_functions();
RatFun k(int m, long v) { return RatFun::constant(m, BaseElem(v)); }
MultiPoly mp(const RatFun &r) { return r.num() * r.den().lead_coeff().inverse(); }

bool has_pair(const std::vector<DarbouxPair> &pairs, const RatFun &p, const RatFun &cof) {
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const DarbouxPair &d) { return RatFun(d.p) == p && RatFun(d.cofactor) == cof; });
}

// Random polynomial h with nonzero derivative in the last variable.
RatFun random_h(std::mt19937_64 &rng, int m, int deg) {
  MultiPoly h;
  do
    h = random_poly(rng, m, deg, Q, 4);
  while (h.partial(m - 1).is_zero());
  return RatFun(h);
}
} // namespace

TEST_CASE("verify_witness examples") {
  const RatFun y = x(1, 0);
  CHECK(verify_witness(y * y, {y, BaseElem(), 1}, Q));
  CHECK_FALSE(verify_witness(y, {y, BaseElem(), 1}, Q));
  CHECK(verify_witness(x(2, 0) * x(2, 1), {x(2, 1), BaseElem(), 1}, Q));
  CHECK(verify_witness(y * y - y / t(1), {t(1) * y, BaseElem(), 1}, QT));
  CHECK_THROWS_AS(verify_witness(y, {RatFun(1), BaseElem(), 1}, Q), std::invalid_argument);
  CHECK_THROWS_AS(verify_witness(y, {y, BaseElem(), 0}, Q), std::invalid_argument);
  CHECK_THROWS_AS(verify_witness(y, {x(2, 0), BaseElem(), 1}, Q), std::invalid_argument);
}

TEST_CASE("construct_f examples") {
  const RatFun y = x(1, 0);
  CHECK(construct_f(y, BaseElem(), 1, Q) == y * y);
  CHECK(construct_f(x(2, 1), BaseElem(), 1, Q) == x(2, 0) * x(2, 1));
  CHECK(construct_f(t(1) * y, BaseElem(), 1, QT) == y * y - y / t(1));
  CHECK_THROWS_AS(construct_f(x(2, 0), BaseElem(), 1, Q), DegenerateAnsatz);
}

TEST_CASE("polynomial vector field examples") {
  const RatFun y = x(1, 0);
  auto vf = polynomial_vector_field(y * y, Q);
  REQUIRE(vf.components.size() == 1);
  CHECK(RatFun(vf.components[0]) == y * y);
  CHECK(vf.q.is_constant());
  CHECK(RatFun(apply_vector_field(vf, mp(y * y * y), Q)) == k(1, 3) * y * y * y * y);

  const RatFun x0 = x(2, 0), x1 = x(2, 1);
  vf = polynomial_vector_field(x0 / x1, Q);
  CHECK(RatFun(vf.components[0]) == x1 * x1);
  CHECK(RatFun(vf.components[1]) == x0);
  CHECK(RatFun(vf.q) == x1);

  std::mt19937_64 rng(23);
  for (int n = 0; n < 20; ++n) {
    const FieldConfig cfg = n % 2 ? QT : Q;
    const RatFun f = random_ratfun(rng, 2, cfg);
    const auto v = polynomial_vector_field(f, cfg);
    const MultiPoly h = random_poly(rng, 2, 3, cfg);
    CHECK(RatFun(apply_vector_field(v, h, cfg)) == RatFun(v.q) * lie_derivative(RatFun(h), f, cfg));
  }
}

TEST_CASE("find_darboux examples") {
  const RatFun y = x(1, 0);
  auto pairs = find_darboux(y * y, 1, Q);
  CHECK(has_pair(pairs, y, y));

  pairs = find_darboux(y * y - y, 1, Q);
  CHECK(has_pair(pairs, y, y - k(1, 1)));
  CHECK(has_pair(pairs, y - k(1, 1), y));

  pairs = find_darboux(y, 1, Q);
  REQUIRE(pairs.size() == 1);
  CHECK(has_pair(pairs, y, k(1, 1)));

  CHECK_THROWS_AS(find_darboux(y, 0, Q), std::invalid_argument);
}

TEST_CASE("every Darboux pair satisfies its defining identity") {
  std::mt19937_64 rng(29);
  for (int n = 0; n < 12; ++n) {
    const FieldConfig cfg = n % 3 == 2 ? QT : Q;
    const int m = 1 + n % 2;
    const RatFun f = RatFun(random_poly(rng, m, 2, cfg, 3));
    const auto vf = polynomial_vector_field(f, cfg);
    for (const auto &d : find_darboux(f, 2, cfg)) {
      CHECK(apply_vector_field(vf, d.p, cfg) == d.cofactor * d.p);
      CHECK(d.p.lead_coeff() == BaseElem(1));
      CHECK(d.p.total_degree() >= 1);
    }
  }
}

TEST_CASE("combine_cofactors examples") {
  const RatFun y = x(1, 0);
  const RatFun f = y * y - y;
  const auto pairs = find_darboux(f, 1, Q);
  const auto q = clear_denominators(f).second;
  const auto w = combine_cofactors(pairs, q, 2, Q);
  REQUIRE(w);
  CHECK(verify_witness(f, *w, Q));
  CHECK(w->k == 1);

  CHECK_FALSE(combine_cofactors(find_darboux(y, 1, Q), clear_denominators(y).second, 5, Q));
  CHECK_FALSE(combine_cofactors({}, MultiPoly(1, BaseElem(1)), 3, Q));
}

TEST_CASE("combination of Darboux factors with rational exponents is scaled to integers") {
  // h = x0^2 / (x0 - 1) is not needed at k = 1 but at k = 2 the factors combine
  const RatFun y = x(1, 0);
  const RatFun h = y * y / (y - k(1, 1));
  const RatFun f = construct_f(h, BaseElem(1), 2, Q);
  const auto r = search_witness(f, 2, 3, Q);
  REQUIRE(r.outcome == Outcome::Found);
  CHECK(verify_witness(f, *r.witness, Q));
}

TEST_CASE("direct oracle examples") {
  const RatFun y = x(1, 0);
  auto w = search_witness_direct(y * y, 1, 1, Q);
  REQUIRE(w);
  CHECK(w->h == y);
  CHECK(w->e == BaseElem());
  CHECK(w->k == 1);
  CHECK_FALSE(search_witness_direct(y, 6, 5, Q));
  w = search_witness_direct(y * y - y / t(1), 2, 2, QT);
  REQUIRE(w);
  CHECK(verify_witness(y * y - y / t(1), *w, QT));
  CHECK_THROWS_AS(search_witness_direct(y, -1, 1, Q), std::invalid_argument);
  CHECK_THROWS_AS(search_witness_direct(y, 1, 0, Q), std::invalid_argument);
}

TEST_CASE("linear fast path") {
  const RatFun x0 = x(2, 0), x1 = x(2, 1);
  auto r = nonexistence_linear(x(1, 0), Q);
  REQUIRE(r);
  CHECK(r->outcome == Outcome::NoWitnessAnyDegree);
  CHECK(r->reason == "valuation argument");
  r = nonexistence_linear(x0 + x1 + k(2, 1), Q);
  REQUIRE(r);
  CHECK(r->outcome == Outcome::NoWitnessAnyDegree);
  CHECK(nonexistence_linear(t(2) * x0 + x1 / t(2), QT));
  CHECK_FALSE(nonexistence_linear(x(1, 0) * x(1, 0), Q));
  CHECK_FALSE(nonexistence_linear(x0 / x1, Q));

  std::mt19937_64 rng(31);
  for (int n = 0; n < 20; ++n) {
    const int m = 1 + n % 2;
    RatFun f = RatFun::constant(m, BaseElem(uniform(rng, -3, 3)));
    for (int i = 0; i < m; ++i)
      f += k(m, uniform(rng, -3, 3)) * x(m, i);
    CHECK(nonexistence_linear(f, Q));
    CHECK_FALSE(search_witness_direct(f, 4, 4, Q));
  }
}

TEST_CASE("search_witness examples") {
  const RatFun y = x(1, 0);
  auto r = search_witness(y * y, 2, 2, Q);
  REQUIRE(r.outcome == Outcome::Found);
  CHECK(r.witness->h == y);
  r = search_witness(y, 6, 5, Q);
  CHECK(r.outcome == Outcome::NoWitnessAnyDegree);
  CHECK_FALSE(r.witness);
  r = search_witness(y * y - y, 2, 2, Q);
  REQUIRE(r.outcome == Outcome::Found);
  const bool expected = (r.witness->h == y - k(1, 1) && r.witness->e == BaseElem()) ||
                        (r.witness->h == y && r.witness->e == BaseElem(1));
  CHECK(expected);
  CHECK(r.bounds.deg_h == 2);
  CHECK(r.bounds.kmax == 2);
  CHECK_THROWS_AS(search_witness(y, 0, 1, Q), std::invalid_argument);
}

TEST_CASE("exhausted search records its bounds") {
  // the witness for y' = y^3 + 1 needs k = 3
  const RatFun y = x(1, 0);
  const auto r = search_witness(y * y * y + k(1, 1), 2, 2, Q);
  CHECK(r.outcome == Outcome::ExhaustedBounds);
  CHECK_FALSE(r.witness);
  CHECK(r.bounds.deg_h == 2);
  CHECK(r.bounds.kmax == 2);
  CHECK(r.bounds.deg_cofactor == 2);
}

TEST_CASE("round trip through construct_f and search") {
  std::mt19937_64 rng(37);
  for (int n = 0; n < 12; ++n) {
    const int m = 1 + n % 3;
    const RatFun h = random_h(rng, m, 3);
    const long kk = (n % 2 ? -1 : 1) * uniform(rng, 1, 3);
    const BaseElem e(uniform(rng, -3, 3));
    const RatFun f = construct_f(h, e, kk, Q);
    REQUIRE(verify_witness(f, {h, e, kk}, Q));
    const auto r = search_witness(f, 3, std::labs(kk), Q);
    CHECK(r.outcome == Outcome::Found);
    if (r.witness)
      CHECK(verify_witness(f, *r.witness, Q));
  }
}

TEST_CASE("scaling closure") {
  std::mt19937_64 rng(41);
  for (int n = 0; n < 10; ++n) {
    const FieldConfig cfg = n % 2 ? QT : Q;
    const int m = 1 + n % 2;
    const RatFun h = random_h(rng, m, 2);
    const BaseElem e = small_base(rng, cfg);
    const RatFun f = construct_f(h, e, 1, cfg);
    for (long lambda : {2L, 3L})
      CHECK(verify_witness(f, {rf_pow(h, static_cast<int>(lambda)), e * BaseElem(lambda), lambda}, cfg));
  }
}

TEST_CASE("Darboux pipeline and direct oracle agree on small instances") {
  std::mt19937_64 rng(43);
  for (int n = 0; n < 10; ++n) {
    const int m = 1 + n % 2;
    const RatFun h = random_h(rng, m, 2);
    const long kk = uniform(rng, 1, 2);
    const RatFun f = construct_f(h, BaseElem(uniform(rng, -2, 2)), kk, Q);
    const auto r = search_witness(f, 2, 2, Q);
    const auto d = search_witness_direct(f, 2, 2, Q);
    CHECK((r.outcome == Outcome::Found) == d.has_value());
    if (d)
      CHECK(verify_witness(f, *d, Q));
  }
}
