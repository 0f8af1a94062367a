#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace logsplit::internal {

inline constexpr int kMaxVars = 128;

/// Exponent vector with its total degree cached. Capacity is fixed so terms
/// can be copied without allocation; only the first nvars slots are used.
struct Mono {
  std::uint16_t deg = 0;
  std::array<std::uint8_t, kMaxVars> e{};

  static Mono var(int i, int power = 1);
  bool divides(const Mono &o, int n) const;
  Mono operator*(const Mono &o) const;
  /// Caller guarantees divisibility.
  Mono operator/(const Mono &o) const;
  Mono lcm(const Mono &o, int n) const;
  bool coprime(const Mono &o, int n) const;
};

bool mono_equal(const Mono &a, const Mono &b, int n);
/// Degree-reverse-lexicographic comparison: negative, zero or positive.
int grevlex_cmp(const Mono &a, const Mono &b, int n);

struct Term {
  Mono m;
  mpq_class c;
};

/// Sparse polynomial over Q in a fixed number of variables, with terms kept
/// in strictly decreasing grevlex order and no zero coefficients.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(int nvars) : n_(nvars) {}
  QPoly(int nvars, const mpq_class &c);
  static QPoly variable(int nvars, int i);
  static QPoly term(int nvars, const Mono &m, const mpq_class &c);
  /// Builds from unsorted terms, merging duplicates.
  static QPoly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.deg == 0); }
  const std::vector<Term> &terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  const Term &lead() const { return t_.front(); }
  int total_degree() const;
  int degree_in(int var) const;
  /// Highest-index variable occurring, or -1 for constants.
  int main_variable() const;
  bool uses(int var) const { return degree_in(var) > 0; }
  mpq_class constant_coeff() const;

  QPoly operator-() const;
  QPoly &operator+=(const QPoly &o);
  QPoly &operator-=(const QPoly &o);
  QPoly &operator*=(const mpq_class &s);
  friend QPoly operator+(QPoly a, const QPoly &b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly &b) { return a -= b; }
  friend QPoly operator*(const QPoly &a, const QPoly &b);
  friend QPoly operator*(QPoly a, const mpq_class &s) { return a *= s; }
  friend bool operator==(const QPoly &a, const QPoly &b);
  friend bool operator!=(const QPoly &a, const QPoly &b) { return !(a == b); }

  /// this - c * m * o, in place.
  void sub_mul_term(const mpq_class &c, const Mono &m, const QPoly &o);
  QPoly mul_term(const mpq_class &c, const Mono &m) const;
  void drop_lead();

  QPoly monic() const;
  /// Scales to integer coefficients with content 1 and positive leading term.
  QPoly primitive_integer() const;

  QPoly derivative(int var) const;
  QPoly pow(unsigned k) const;
  /// Replace variable var by the polynomial s (same ring).
  QPoly substitute(int var, const QPoly &s) const;
  QPoly evaluate(int var, const mpq_class &v) const;

  /// Coefficients with respect to var (index = power); the coefficients do
  /// not involve var.
  std::vector<QPoly> coefficients_in(int var) const;
  static QPoly from_coefficients_in(int nvars, int var, const std::vector<QPoly> &cs);

  std::string to_string() const;

private:
  void sort_and_merge();
  int n_ = 0;
  std::vector<Term> t_;
};

/// Throws std::logic_error if b does not divide a.
QPoly exact_divide(const QPoly &a, const QPoly &b);
/// Returns quotient when b divides a.
bool try_divide(const QPoly &a, const QPoly &b, QPoly &quotient);
/// Monic greatest common divisor (recursive primitive remainder sequences).
QPoly gcd(const QPoly &a, const QPoly &b);

} // namespace logsplit::internal
