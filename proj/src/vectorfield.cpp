#include "logsplit/bridge.hpp"
#include "logsplit/engine.hpp"
#include "logsplit/witness.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <stdexcept>

namespace logsplit {

namespace {

void check_field(const RatFun &f, FieldConfig cfg) {
  if (!cfg.has_t() && f.involves_t())
    throw std::invalid_argument("t occurs but the base field is Q");
}

} // namespace

VectorField polynomial_vector_field(const RatFun &f, FieldConfig cfg) {
  check_field(f, cfg);
  const int m = f.order();
  auto [p, q] = clear_denominators(f);
  VectorField x;
  for (int i = 0; i + 1 < m; ++i)
    x.components.push_back(q * MultiPoly::variable(m, i + 1));
  x.components.push_back(p);
  x.q = q;
  return x;
}

MultiPoly apply_vector_field(const VectorField &x, const MultiPoly &h, FieldConfig cfg) {
  const int m = h.order();
  if (static_cast<int>(x.components.size()) != m)
    throw std::invalid_argument("apply_vector_field: order mismatch");
  MultiPoly r = x.q * h.delta_coeffs(cfg);
  for (int i = 0; i < m; ++i) {
    MultiPoly d = h.partial(i);
    if (!d.is_zero())
      r += x.components[i] * d;
  }
  return r;
}

} // namespace logsplit

namespace logsplit::internal {

int x_degree(const QPoly &p, int m) {
  int d = -1;
  for (const auto &t : p.terms()) {
    int s = 0;
    for (int i = 0; i < m; ++i)
      s += t.m.e[i];
    d = std::max(d, s);
  }
  return d;
}

int t_degree(const QPoly &p, int m) {
  if (p.nvars() <= m)
    return p.is_zero() ? -1 : 0;
  return p.degree_in(m);
}

std::vector<Mono> monomials_upto(int m, bool with_t, int dx, int dt) {
  std::vector<Monomial> xs;
  Monomial e(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == m) {
      xs.push_back(e);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
    e[i] = 0;
  };
  rec(0, dx);
  std::sort(xs.begin(), xs.end(), [](const Monomial &a, const Monomial &b) { return GrlexGreater{}(b, a); });
  std::vector<Mono> out;
  for (const auto &x : xs)
    for (int j = 0; j <= (with_t ? dt : 0); ++j) {
      Mono mono;
      for (int i = 0; i < m; ++i) {
        mono.e[i] = static_cast<std::uint8_t>(x[i]);
        mono.deg = static_cast<std::uint16_t>(mono.deg + x[i]);
      }
      if (j) {
        mono.e[m] = static_cast<std::uint8_t>(j);
        mono.deg = static_cast<std::uint16_t>(mono.deg + j);
      }
      out.push_back(mono);
    }
  return out;
}

std::string key_of(const Mono &mono, int n) {
  return std::string(reinterpret_cast<const char *>(mono.e.data()), static_cast<std::size_t>(n));
}

EngineField make_engine_field(const RatFun &f, FieldConfig cfg) {
  check_field(f, cfg);
  EngineField x;
  x.m = f.order();
  x.with_t = cfg.has_t();
  x.n = x.m + (x.with_t ? 1 : 0);
  auto [p, q] = clear_denominators(f);
  x.scale = lcm(t_denominator_lcm(p), t_denominator_lcm(q));
  const BaseElem s(x.scale);
  const QPoly ph = to_qpoly(p * s, x.with_t);
  x.qhat = to_qpoly(q * s, x.with_t);
  for (int i = 0; i + 1 < x.m; ++i)
    x.comp.push_back(x.qhat * QPoly::variable(x.n, i + 1));
  x.comp.push_back(ph);
  if (x.with_t)
    x.comp.push_back(x.qhat);
  return x;
}

QPoly apply_engine(const EngineField &x, const QPoly &p) {
  QPoly r(x.n);
  for (int i = 0; i < x.n; ++i) {
    if (!p.uses(i) || x.comp[i].is_zero())
      continue;
    r += x.comp[i] * p.derivative(i);
  }
  return r;
}

// x-content of a polynomial in Q[t][x], as a monic polynomial in t.
UPoly x_content(const QPoly &q, int m) {
  std::map<std::string, std::vector<mpq_class>> by_x;
  for (const auto &t : q.terms()) {
    auto &c = by_x[key_of(t.m, m)];
    const int d = q.nvars() > m ? t.m.e[m] : 0;
    if (static_cast<int>(c.size()) <= d)
      c.resize(static_cast<std::size_t>(d + 1));
    c[d] += t.c;
  }
  UPoly g;
  for (auto &[k, c] : by_x)
    g = gcd(g, UPoly(std::move(c)));
  return g;
}

QPoly t_power(int n, int m, int j, const mpq_class &c) {
  return QPoly::term(n, j ? Mono::var(m, j) : Mono{}, c);
}

// Unknowns: c_j for the monomials below the leading one, then one multiplier
// u_v per cofactor basis element, so that X(p) = sum_v u_v basis_v * p.
std::vector<QPoly> lead_system(const std::vector<QPoly> &images, const std::vector<Mono> &pmonos,
                               std::size_t lead, const std::vector<QPoly> &basis, int n) {
  const int s = static_cast<int>(lead);
  const int nvars = s + static_cast<int>(basis.size());
  std::map<std::string, std::vector<Term>> eqs;
  auto emit = [&](const Mono &sigma, Term t) { eqs[key_of(sigma, n)].push_back(std::move(t)); };
  for (const auto &t : images[lead].terms())
    emit(t.m, {Mono{}, t.c});
  for (int j = 0; j < s; ++j)
    for (const auto &t : images[j].terms())
      emit(t.m, {Mono::var(j), t.c});
  for (std::size_t v = 0; v < basis.size(); ++v) {
    const Mono uv = Mono::var(s + static_cast<int>(v));
    for (const auto &t : basis[v].terms()) {
      emit(t.m * pmonos[lead], {uv, -t.c});
      for (int j = 0; j < s; ++j)
        emit(t.m * pmonos[j], {uv * Mono::var(j), -t.c});
    }
  }
  std::vector<QPoly> system;
  for (auto &[k, terms] : eqs) {
    QPoly e = QPoly::from_terms(nvars, std::move(terms));
    if (!e.is_zero())
      system.push_back(std::move(e));
  }
  return system;
}


std::vector<QPoly> pencil_basis(const EngineField &x) {
  const int m = x.m, n = x.n;
  const UPoly c = x_content(x.qhat, m);
  QPoly q1 = x.qhat;
  if (x.with_t && c.degree() > 0) {
    QPoly cq(n);
    for (int j = 0; j <= c.degree(); ++j)
      cq += t_power(n, m, j, c.coeff(j));
    q1 = exact_divide(x.qhat, cq);
  }
  int xt = 0;
  for (int i = 0; i < m; ++i)
    xt = std::max(xt, t_degree(x.comp[i], m));
  const int bdeg = x.with_t ? std::max(0, c.degree()) + std::max(0, xt - t_degree(x.qhat, m)) : 0;
  std::vector<QPoly> basis;
  for (int j = 0; j <= bdeg; ++j)
    basis.push_back(q1 * t_power(n, m, j, 1));
  return basis;
}

} // namespace logsplit::internal
