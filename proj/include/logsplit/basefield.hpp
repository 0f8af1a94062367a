#pragma once

#include "logsplit/upoly.hpp"

#include <string>

namespace logsplit {

/// Which differential base field the coefficients live in.
enum class FieldKind {
  RationalsConstant,    ///< Q with the zero derivation
  RationalFunctionsInT, ///< Q(t) with d/dt
};

struct FieldConfig {
  FieldKind kind = FieldKind::RationalsConstant;

  static FieldConfig rationals() { return {FieldKind::RationalsConstant}; }
  static FieldConfig rational_functions() { return {FieldKind::RationalFunctionsInT}; }
  bool has_t() const { return kind == FieldKind::RationalFunctionsInT; }
  friend bool operator==(FieldConfig a, FieldConfig b) { return a.kind == b.kind; }
};

/// Element of Q(t), kept as num/den with gcd(num, den) = 1 and den monic.
/// Q is the t-degree-0 subfield, so both fields share one code path; the
/// canonical form makes structural equality coincide with field equality.
class BaseElem {
public:
  BaseElem() : den_(1) {}
  BaseElem(long c) : num_(c), den_(1) {}
  BaseElem(const mpq_class &c) : num_(c), den_(1) {}
  BaseElem(UPoly num) : num_(std::move(num)), den_(1) {}
  /// Throws std::invalid_argument when den is zero.
  BaseElem(UPoly num, UPoly den);

  static BaseElem t() { return BaseElem(UPoly::variable()); }

  const UPoly &num() const { return num_; }
  const UPoly &den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.lead() == 1; }
  /// True when the element lies in Q (no t dependence).
  bool is_rational() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// Only meaningful when is_rational().
  mpq_class rational_value() const { return num_.constant_term(); }
  /// max(deg num, deg den) in t
  int t_degree() const { return std::max(num_.degree(), den_.degree()); }

  BaseElem operator-() const;
  BaseElem &operator+=(const BaseElem &o);
  BaseElem &operator-=(const BaseElem &o);
  BaseElem &operator*=(const BaseElem &o);
  BaseElem &operator/=(const BaseElem &o);
  friend BaseElem operator+(BaseElem a, const BaseElem &b) { return a += b; }
  friend BaseElem operator-(BaseElem a, const BaseElem &b) { return a -= b; }
  friend BaseElem operator*(BaseElem a, const BaseElem &b) { return a *= b; }
  friend BaseElem operator/(BaseElem a, const BaseElem &b) { return a /= b; }
  friend bool operator==(const BaseElem &a, const BaseElem &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const BaseElem &a, const BaseElem &b) { return !(a == b); }

  /// Multiplicative inverse; throws std::invalid_argument on zero.
  BaseElem inverse() const;
  BaseElem pow(int n) const;

  /// Printed as a rational "p/q", a t-polynomial, or "(num)/(den)".
  std::string to_string() const;

private:
  void canonicalize();
  UPoly num_;
  UPoly den_;
};

BaseElem be_add(const BaseElem &a, const BaseElem &b);
BaseElem be_mul(const BaseElem &a, const BaseElem &b);
BaseElem be_neg(const BaseElem &a);
BaseElem be_inv(const BaseElem &a);

/// Renders c * ms as one signed summand, e.g. "-x0/t" or " + (t + 1)*x1".
/// `leading` drops the surrounding spaces of the sign.
std::string format_term(const BaseElem &c, const std::string &ms, bool leading);

/// The base derivation: zero on Q, d/dt on Q(t).
BaseElem delta_base(const BaseElem &a, FieldConfig cfg);

} // namespace logsplit
