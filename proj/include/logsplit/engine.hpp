#pragma once

// The vector field over Q used by the search engines. Over Q(t) the
// t-denominators are cleared with a common factor D(t) and t becomes an
// extra variable with X(t) = D*Q_f, so everything is polynomial over Q.

#include "logsplit/qpoly.hpp"
#include "logsplit/ratfun.hpp"

#include <string>
#include <vector>

namespace logsplit::internal {

struct EngineField {
  int m = 0;
  bool with_t = false;
  /// m, plus one for t
  int n = 0;
  /// comp[i] = X(z_i)
  std::vector<QPoly> comp;
  /// D * Q_f
  QPoly qhat;
  /// D; the public field is this one divided by D.
  UPoly scale;
};

EngineField make_engine_field(const RatFun &f, FieldConfig cfg);
QPoly apply_engine(const EngineField &x, const QPoly &p);

/// Total degree in x0..x_{m-1} only.
int x_degree(const QPoly &p, int m);
int t_degree(const QPoly &p, int m);

/// Monomials with x-degree <= dx and t-degree <= dt (t only when with_t),
/// ascending in the order "x-grlex, then t-degree".
std::vector<Mono> monomials_upto(int m, bool with_t, int dx, int dt);

/// Byte key of the first n exponents.
std::string key_of(const Mono &mono, int n);

/// x-content of a polynomial in Q[t][x], monic in t.
UPoly x_content(const QPoly &q, int m);
/// c * t^j
QPoly t_power(int n, int m, int j, const mpq_class &c);

/// Elements Q1 * t^j, where Q1 is qhat divided by its x-content c, for j up
/// to deg c plus the excess of the t-degree of the x-components over that
/// of qhat. An e in F with (k x0 - e) * qhat * h = X(h) for h in Q[t][x]
/// primitive over Q[t] satisfies e * qhat = b(t) * Q1 with b in their span.
std::vector<QPoly> pencil_basis(const EngineField &x);

/// Coefficient equations of X(p) = sum_v u_v basis_v * p with
/// p = pmonos[lead] + sum_{j<lead} c_j pmonos[j], given images[j] = X(pmonos[j]).
/// Unknowns: c_0..c_{lead-1}, then u_v.
std::vector<QPoly> lead_system(const std::vector<QPoly> &images, const std::vector<Mono> &pmonos,
                               std::size_t lead, const std::vector<QPoly> &basis, int n);

} // namespace logsplit::internal
