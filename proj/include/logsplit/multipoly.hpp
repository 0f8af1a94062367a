#pragma once

#include "logsplit/basefield.hpp"

#include <map>
#include <string>
#include <vector>

namespace logsplit {

/// Dense exponent vector of a monomial x0^a0 ... x_{m-1}^a_{m-1}.
using Monomial = std::vector<int>;

int total_degree(const Monomial &m);

/// Graded lexicographic order with x0 < x1 < ... < x_{m-1}: compare total
/// degree first, then exponents starting from the highest variable.
struct GrlexGreater {
  bool operator()(const Monomial &a, const Monomial &b) const;
};

/// Sparse polynomial in x0..x_{m-1} with coefficients in the base field.
/// Terms iterate from the greatest monomial down; zero coefficients are
/// never stored, so equality is structural.
class MultiPoly {
public:
  using TermMap = std::map<Monomial, BaseElem, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(int order) : m_(order) {}
  MultiPoly(int order, const BaseElem &c);
  static MultiPoly variable(int order, int i);
  static MultiPoly monomial(int order, const Monomial &mono, const BaseElem &c);

  int order() const { return m_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for zero.
  int total_degree() const;
  int degree_in(int i) const;
  BaseElem coeff(const Monomial &mono) const;
  /// Greatest term under grlex. Precondition: nonzero.
  const Monomial &lead_monomial() const { return terms_.begin()->first; }
  const BaseElem &lead_coeff() const { return terms_.begin()->second; }

  void add_term(const Monomial &mono, const BaseElem &c);

  MultiPoly operator-() const;
  MultiPoly &operator+=(const MultiPoly &o);
  MultiPoly &operator-=(const MultiPoly &o);
  MultiPoly &operator*=(const BaseElem &s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
  friend MultiPoly operator*(MultiPoly a, const BaseElem &s) { return a *= s; }
  friend bool operator==(const MultiPoly &a, const MultiPoly &b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly &a, const MultiPoly &b) { return !(a == b); }

  MultiPoly pow(unsigned k) const;
  /// Coefficient of the leading monomial made 1.
  MultiPoly monic() const;
  MultiPoly partial(int i) const;
  /// Coefficientwise base derivation.
  MultiPoly delta_coeffs(FieldConfig cfg) const;
  /// Exact division; throws std::logic_error when not exact.
  MultiPoly exact_div(const MultiPoly &d) const;
  bool divides(const MultiPoly &a) const;

  /// True when some coefficient depends on t.
  bool involves_t() const;

  /// Expanded, greatest monomial first, e.g. "x0^2 - 1/2*x1 + t".
  std::string to_string() const;

private:
  int m_ = 0;
  TermMap terms_;
};

} // namespace logsplit
