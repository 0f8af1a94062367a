#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace logsplit {

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// lowest degree first and the vector never carries trailing zeros, so the
/// zero polynomial is the empty vector.
class UPoly {
public:
  UPoly() = default;
  UPoly(const mpq_class &c);
  UPoly(long c) : UPoly(mpq_class(c)) {}
  explicit UPoly(std::vector<mpq_class> coeffs);

  static UPoly monomial(const mpq_class &c, int degree);
  static UPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class> &coeffs() const { return c_; }
  mpq_class coeff(int i) const;
  const mpq_class &lead() const { return c_.back(); }
  mpq_class constant_term() const { return c_.empty() ? mpq_class(0) : c_[0]; }

  UPoly operator-() const;
  UPoly &operator+=(const UPoly &o);
  UPoly &operator-=(const UPoly &o);
  UPoly &operator*=(const UPoly &o);
  UPoly &operator*=(const mpq_class &s);
  friend UPoly operator+(UPoly a, const UPoly &b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly &b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly &b) { return a *= b; }
  friend UPoly operator*(UPoly a, const mpq_class &s) { return a *= s; }
  friend bool operator==(const UPoly &a, const UPoly &b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly &a, const UPoly &b) { return !(a == b); }

  /// Euclidean division; throws std::invalid_argument on a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly &d) const;
  /// Division that must leave no remainder; throws std::logic_error otherwise.
  UPoly exact_div(const UPoly &d) const;

  UPoly derivative() const;
  UPoly monic() const;
  mpq_class eval(const mpq_class &x) const;
  UPoly pow(unsigned n) const;
  /// p(x + s)
  UPoly shift(const mpq_class &s) const;

  std::string to_string(const std::string &var = "t") const;

private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly &a, const UPoly &b);
UPoly lcm(const UPoly &a, const UPoly &b);
/// a / gcd(a, a')
UPoly squarefree_part(const UPoly &a);

} // namespace logsplit
