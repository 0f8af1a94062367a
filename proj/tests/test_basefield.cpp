#include "doctest.h"
#include "support.hpp"

using namespace logsplit;
using namespace testing_support;

namespace {
const FieldConfig Q = FieldConfig::rationals();
const FieldConfig QT = FieldConfig::rational_functions();
BaseElem tt() { return BaseElem::t(); }
BaseElem q(long a, long b = 1) { return BaseElem(mpq_class(a, b)); }
UPoly up(std::vector<mpq_class> c) { return UPoly(std::move(c)); }
} // namespace

TEST_CASE("base field arithmetic examples") {
  CHECK(be_add(q(1, 2), q(1, 3)) == q(5, 6));
  CHECK(be_inv(tt()) == BaseElem(UPoly(1), UPoly::variable()));
  const BaseElem a = tt() / (tt() + q(1));
  const BaseElem b = (tt() + q(1)) / tt();
  CHECK(be_mul(a, b) == q(1));
  CHECK(be_neg(q(3)) == q(-3));
  CHECK_THROWS_AS(be_inv(BaseElem()), std::invalid_argument);
  CHECK_THROWS_AS(BaseElem(UPoly(1), UPoly()), std::invalid_argument);
}

TEST_CASE("canonical form: monic coprime denominator") {
  // (2t + 2) / (4t^2 - 4) = (1/2) / (t - 1)
  const BaseElem e(up({2, 2}), up({-4, 0, 4}));
  CHECK(e.den() == up({-1, 1}));
  CHECK(e.num() == UPoly(mpq_class(1, 2)));
  CHECK(e.to_string() == "1/2/(t - 1)");
  CHECK(q(3, 6).to_string() == "1/2");
  CHECK(q(-7).to_string() == "-7");
}

TEST_CASE("base derivation examples") {
  CHECK(delta_base(q(7, 3), Q) == BaseElem());
  CHECK(delta_base(tt() * tt(), QT) == q(2) * tt());
  CHECK(delta_base(be_inv(tt()), QT) == -be_inv(tt() * tt()));
  // Q ignores t entirely: the derivation is zero whatever the element
  CHECK(delta_base(q(5), QT) == BaseElem());
}

TEST_CASE("random field axioms and Leibniz rule") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const BaseElem a = small_base(rng, QT), b = small_base(rng, QT), c = small_base(rng, QT);
    CHECK(be_add(a, be_neg(a)).is_zero());
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero())
      CHECK(a * be_inv(a) == q(1));
    CHECK(delta_base(a * b, QT) == a * delta_base(b, QT) + b * delta_base(a, QT));
    CHECK(delta_base(a + b, QT) == delta_base(a, QT) + delta_base(b, QT));
    const BaseElem r = small_base(rng, Q);
    CHECK(r.is_rational());
    CHECK(delta_base(r * a, Q).is_zero());
  }
}

TEST_CASE("univariate gcd and square-free part") {
  const UPoly x = UPoly::variable();
  const UPoly a = (x - UPoly(1)) * (x - UPoly(1)) * (x + UPoly(2));
  const UPoly b = (x - UPoly(1)) * (x + UPoly(3));
  CHECK(gcd(a, b) == x - UPoly(1));
  CHECK(squarefree_part(a) == ((x - UPoly(1)) * (x + UPoly(2))));
  CHECK(gcd(UPoly(), UPoly()).is_zero());
  const auto [quo, rem] = a.divmod(b);
  CHECK(quo * b + rem == a);
  CHECK(rem.degree() < b.degree());
}
