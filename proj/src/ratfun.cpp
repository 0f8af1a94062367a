#include "logsplit/ratfun.hpp"

#include "logsplit/bridge.hpp"

#include <cmath>
#include <stdexcept>

namespace logsplit {

MultiPoly poly_gcd(const MultiPoly &a, const MultiPoly &b) {
  const int m = a.order();
  if (a.is_zero())
    return b.monic();
  if (b.is_zero())
    return a.monic();
  if (a.is_constant() || b.is_constant())
    return MultiPoly(m, BaseElem(1));
  const bool with_t = a.involves_t() || b.involves_t();
  const internal::QPoly qa = internal::to_qpoly(internal::clear_t_denominators(a), with_t);
  const internal::QPoly qb = internal::to_qpoly(internal::clear_t_denominators(b), with_t);
  const MultiPoly g = internal::from_qpoly(internal::gcd(qa, qb), m, with_t);
  if (g.is_constant())
    return MultiPoly(m, BaseElem(1));
  return g.monic();
}

RatFun::RatFun(int order) : num_(order), den_(order, BaseElem(1)) {}

RatFun::RatFun(const MultiPoly &p) : num_(p), den_(p.order(), BaseElem(1)) {}

RatFun::RatFun(const MultiPoly &num, const MultiPoly &den) : num_(num), den_(den) {
  if (den_.is_zero())
    throw std::invalid_argument("RatFun: zero denominator");
  if (num_.order() != den_.order())
    throw std::invalid_argument("RatFun: order mismatch");
  reduce();
}

RatFun::RatFun(MultiPoly num, MultiPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {
  normalize_den();
}

RatFun RatFun::constant(int order, const BaseElem &c) { return RatFun(MultiPoly(order, c)); }

RatFun RatFun::variable(int order, int i) { return RatFun(MultiPoly::variable(order, i)); }

void RatFun::normalize_den() {
  if (num_.is_zero()) {
    den_ = MultiPoly(den_.order(), BaseElem(1));
    return;
  }
  const BaseElem lc = den_.lead_coeff();
  if (!lc.is_one()) {
    const BaseElem inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

void RatFun::reduce() {
  if (!num_.is_zero() && !den_.is_constant()) {
    const MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  normalize_den();
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, true); }

RatFun &RatFun::operator+=(const RatFun &o) {
  if (order() != o.order())
    throw std::invalid_argument("RatFun: order mismatch");
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant())
      reduce();
    else
      normalize_den();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFun &RatFun::operator-=(const RatFun &o) { return *this += -o; }

RatFun &RatFun::operator*=(const RatFun &o) {
  if (order() != o.order())
    throw std::invalid_argument("RatFun: order mismatch");
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    normalize_den();
    return *this;
  }
  // cross-cancel so the product is already in lowest terms
  const MultiPoly g1 = poly_gcd(num_, o.den_);
  const MultiPoly g2 = poly_gcd(o.num_, den_);
  MultiPoly n = num_.exact_div(g1) * o.num_.exact_div(g2);
  MultiPoly d = den_.exact_div(g2) * o.den_.exact_div(g1);
  num_ = std::move(n);
  den_ = std::move(d);
  normalize_den();
  return *this;
}

RatFun RatFun::inverse() const {
  if (is_zero())
    throw std::invalid_argument("RatFun: division by zero");
  return RatFun(den_, num_, true);
}

RatFun &RatFun::operator/=(const RatFun &o) { return *this *= o.inverse(); }

RatFun RatFun::pow(int n) const {
  if (n < 0)
    return inverse().pow(-n);
  const auto k = static_cast<unsigned>(n);
  return RatFun(num_.pow(k), den_.pow(k), true);
}

std::string RatFun::to_string() const {
  const std::string n = num_.to_string();
  if (is_polynomial())
    return n;
  std::string s = num_.terms().size() > 1 ? "(" + n + ")" : n;
  const std::string d = den_.to_string();
  bool bare = false;
  if (den_.terms().size() == 1) {
    int vars = 0;
    for (int e : den_.lead_monomial())
      vars += e > 0;
    bare = vars == 1;
  }
  return s + "/" + (bare ? d : "(" + d + ")");
}

RatFun rf_add(const RatFun &a, const RatFun &b) { return a + b; }
RatFun rf_mul(const RatFun &a, const RatFun &b) { return a * b; }
RatFun rf_neg(const RatFun &a) { return -a; }
RatFun rf_inv(const RatFun &a) { return a.inverse(); }
RatFun rf_pow(const RatFun &a, int n) { return a.pow(n); }

RatFun partial(const RatFun &h, int i) {
  if (i < 0 || i >= h.order())
    throw std::invalid_argument("partial: index out of range");
  const MultiPoly &n = h.num();
  const MultiPoly &d = h.den();
  if (h.is_polynomial())
    return RatFun(n.partial(i));
  return RatFun(n.partial(i) * d - n * d.partial(i), d * d);
}

RatFun delta_F(const RatFun &h, FieldConfig cfg) {
  if (!cfg.has_t())
    return RatFun(h.order());
  const MultiPoly &n = h.num();
  const MultiPoly &d = h.den();
  if (h.is_polynomial())
    return RatFun(n.delta_coeffs(cfg));
  return RatFun(n.delta_coeffs(cfg) * d - n * d.delta_coeffs(cfg), d * d);
}

RatFun lie_derivative(const RatFun &h, const RatFun &f, FieldConfig cfg) {
  const int m = h.order();
  if (f.order() != m)
    throw std::invalid_argument("lie_derivative: order mismatch");
  RatFun acc = delta_F(h, cfg);
  for (int i = 0; i + 1 < m; ++i) {
    RatFun d = partial(h, i);
    if (!d.is_zero())
      acc += d * RatFun::variable(m, i + 1);
  }
  RatFun last = partial(h, m - 1);
  if (!last.is_zero())
    acc += last * f;
  return acc;
}

int valuation(const RatFun &h, int i) {
  if (h.is_zero())
    throw std::invalid_argument("valuation: zero has no valuation");
  if (i < 0 || i >= h.order())
    throw std::invalid_argument("valuation: index out of range");
  return h.den().degree_in(i) - h.num().degree_in(i);
}

namespace {

// Coefficient of x_i^deg in p, as a polynomial in the other variables.
MultiPoly coeff_of_power(const MultiPoly &p, int i, int deg) {
  MultiPoly r(p.order());
  for (const auto &[mono, c] : p.terms())
    if (mono[i] == deg) {
      Monomial e = mono;
      e[i] = 0;
      r.add_term(e, c);
    }
  return r;
}

} // namespace

LeadingPart leading_part(const RatFun &h, int i) {
  const int v = valuation(h, i);
  const MultiPoly ln = coeff_of_power(h.num(), i, h.num().degree_in(i));
  const MultiPoly ld = coeff_of_power(h.den(), i, h.den().degree_in(i));
  return {RatFun(ln, ld), v};
}

std::pair<MultiPoly, MultiPoly> clear_denominators(const RatFun &f) { return {f.num(), f.den()}; }

} // namespace logsplit
