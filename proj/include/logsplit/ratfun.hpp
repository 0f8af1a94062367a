#pragma once

#include "logsplit/multipoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace logsplit {

/// Element of F(x0..x_{m-1}) in lowest terms. The denominator's coefficient
/// on its greatest grlex monomial is 1, which makes the representation
/// unique.
class RatFun {
public:
  RatFun() : RatFun(1) {}
  explicit RatFun(int order);
  RatFun(const MultiPoly &p);
  /// Throws std::invalid_argument when den is zero.
  RatFun(const MultiPoly &num, const MultiPoly &den);
  static RatFun constant(int order, const BaseElem &c);
  static RatFun variable(int order, int i);

  int order() const { return num_.order(); }
  const MultiPoly &num() const { return num_; }
  const MultiPoly &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool involves_t() const { return num_.involves_t() || den_.involves_t(); }

  RatFun operator-() const;
  RatFun &operator+=(const RatFun &o);
  RatFun &operator-=(const RatFun &o);
  RatFun &operator*=(const RatFun &o);
  RatFun &operator/=(const RatFun &o);
  friend RatFun operator+(RatFun a, const RatFun &b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun &b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun &b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun &b) { return a /= b; }
  friend bool operator==(const RatFun &a, const RatFun &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun &a, const RatFun &b) { return !(a == b); }

  /// Throws std::invalid_argument on zero.
  RatFun inverse() const;
  /// Negative exponents require a nonzero base.
  RatFun pow(int n) const;

  std::string to_string() const;

private:
  RatFun(MultiPoly num, MultiPoly den, bool /*already reduced*/);
  void normalize_den();
  void reduce();
  MultiPoly num_;
  MultiPoly den_;
};

RatFun rf_add(const RatFun &a, const RatFun &b);
RatFun rf_mul(const RatFun &a, const RatFun &b);
RatFun rf_neg(const RatFun &a);
RatFun rf_inv(const RatFun &a);
RatFun rf_pow(const RatFun &a, int n);

RatFun partial(const RatFun &h, int i);
RatFun delta_F(const RatFun &h, FieldConfig cfg);
/// Sum_{i<=m-2} dh/dx_i * x_{i+1} + dh/dx_{m-1} * f + delta_F(h).
RatFun lie_derivative(const RatFun &h, const RatFun &f, FieldConfig cfg);

/// deg_{x_i}(den) - deg_{x_i}(num); throws std::invalid_argument on zero.
int valuation(const RatFun &h, int i);

struct LeadingPart {
  RatFun coeff;
  int val = 0;
};
/// h = coeff * x_i^{-val} + g with valuation(g, i) > val; coeff is x_i-free.
LeadingPart leading_part(const RatFun &h, int i);

/// (P, Q) coprime with f = P/Q and Q normalized as a RatFun denominator.
std::pair<MultiPoly, MultiPoly> clear_denominators(const RatFun &f);

/// Monic gcd over F in the grlex sense.
MultiPoly poly_gcd(const MultiPoly &a, const MultiPoly &b);

} // namespace logsplit
