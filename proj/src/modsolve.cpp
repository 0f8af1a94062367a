// Rational points of a polynomial system via its reduction modulo a prime:
// the variety is enumerated over F_p from a Groebner basis, every F_p point is
// Hensel-lifted to a p-adic approximation, and rational reconstruction plus
// an exact check over Q decides which points are rational.

#include "logsplit/modpoly.hpp"
#include "logsplit/polysystem.hpp"

#include <algorithm>
#include <map>

namespace logsplit::internal {

namespace {

constexpr u64 kPrime = 2305843009213693951ULL; // 2^61 - 1
constexpr std::size_t kLiftBits = 16384;

std::vector<int> occurring(const std::vector<QPoly> &eqs, int n) {
  std::vector<char> occ(static_cast<std::size_t>(n), 0);
  for (const auto &e : eqs)
    for (const auto &t : e.terms())
      for (int i = 0; i < n; ++i)
        if (t.m.e[i])
          occ[i] = 1;
  std::vector<int> v;
  for (int i = 0; i < n; ++i)
    if (occ[i])
      v.push_back(i);
  return v;
}

bool is_unit(const std::vector<ModPoly> &g) { return g.size() == 1 && g[0].is_constant(); }

// First variable of vars without a pure-power leading monomial in g, or -1.
int free_variable(const std::vector<ModPoly> &g, const std::vector<int> &vars, int n) {
  std::vector<char> pure(static_cast<std::size_t>(n), 0);
  for (const auto &p : g) {
    const Mono &lm = p.lead().m;
    int v = -1, count = 0;
    for (int i = 0; i < n; ++i)
      if (lm.e[i]) {
        v = i;
        ++count;
      }
    if (count == 1)
      pure[v] = 1;
  }
  for (int v : vars)
    if (!pure[v])
      return v;
  return -1;
}

// Minimal polynomial of x_v modulo a zero-dimensional basis (low degree first).
bool minimal_polynomial_mod(const std::vector<ModPoly> &g, int v, int n, u64 p, std::vector<u64> &out) {
  struct Pivot {
    ModPoly row;
    std::vector<u64> combo;
  };
  std::vector<Pivot> piv;
  const Mono xv = Mono::var(v);
  ModPoly power = ModPoly::from_terms(n, p, {ModTerm{Mono{}, 1}});
  for (int j = 0; j <= 512; ++j) {
    if (j > 0)
      power = normal_form_mod(power.mul_term(1, xv), g);
    ModPoly w = power;
    std::vector<u64> combo(static_cast<std::size_t>(j + 1), 0);
    combo[j] = 1;
    // eliminate against pivots, matching leading terms exactly
    std::vector<ModTerm> rest;
    while (!w.is_zero()) {
      const ModTerm lt = w.lead();
      auto it = std::find_if(piv.begin(), piv.end(),
                             [&](const Pivot &pv) { return mono_equal(pv.row.lead().m, lt.m, n); });
      if (it == piv.end()) {
        rest.push_back(lt);
        w.drop_lead();
        continue;
      }
      w.sub_mul_term(lt.c, Mono{}, it->row);
      for (std::size_t k = 0; k < it->combo.size(); ++k)
        combo[k] = (combo[k] + p - mulmod(lt.c, it->combo[k], p)) % p;
    }
    if (rest.empty()) {
      out = std::move(combo);
      return true;
    }
    ModPoly r = ModPoly::from_terms(n, p, std::move(rest));
    const u64 inv = invmod(r.lead().c, p);
    for (auto &c : combo)
      c = mulmod(c, inv, p);
    piv.push_back({r.monic(), std::move(combo)});
  }
  return false;
}

struct Enumeration {
  std::vector<std::vector<u64>> points;
  bool failed = false;
  bool positive_dim = false;
  int free_var = -1;
};

void enumerate(std::vector<ModPoly> g, const std::vector<int> &vars, std::size_t idx, std::vector<u64> &cur,
               int n, u64 p, std::size_t max_pairs, std::size_t max_work, Enumeration &en) {
  if (en.failed || en.positive_dim)
    return;
  if (idx == vars.size()) {
    en.points.push_back(cur);
    return;
  }
  const int v = vars[idx];
  std::vector<u64> mp;
  if (!minimal_polynomial_mod(g, v, n, p, mp)) {
    en.failed = true;
    return;
  }
  for (u64 r : roots_mod(mp, p)) {
    std::vector<ModPoly> g2 = g;
    g2.push_back(ModPoly::from_terms(n, p, {ModTerm{Mono::var(v), 1}, ModTerm{Mono{}, (p - r) % p}}));
    bool aborted = false;
    g2 = groebner_mod(std::move(g2), max_pairs, aborted, max_work);
    if (aborted) {
      en.failed = true;
      return;
    }
    if (is_unit(g2))
      continue;
    cur[idx] = r;
    enumerate(std::move(g2), vars, idx + 1, cur, n, p, max_pairs, max_work, en);
  }
}

// Integer polynomial restricted to the variables in `vars` (local indices).
struct ZPoly {
  std::vector<std::pair<std::vector<int>, mpz_class>> terms;
};

ZPoly to_zpoly(const QPoly &q, const std::vector<int> &vars) {
  const QPoly z = q.primitive_integer();
  ZPoly r;
  for (const auto &t : z.terms()) {
    std::vector<int> e(vars.size());
    for (std::size_t k = 0; k < vars.size(); ++k)
      e[k] = t.m.e[vars[k]];
    r.terms.emplace_back(std::move(e), t.c.get_num());
  }
  return r;
}

ZPoly zderiv(const ZPoly &f, std::size_t var) {
  ZPoly r;
  for (const auto &[e, c] : f.terms)
    if (e[var]) {
      auto e2 = e;
      e2[var] -= 1;
      r.terms.emplace_back(std::move(e2), c * e[var]);
    }
  return r;
}

mpz_class zeval(const ZPoly &f, const std::vector<std::vector<mpz_class>> &powers, const mpz_class &mod) {
  mpz_class acc = 0;
  for (const auto &[e, c] : f.terms) {
    mpz_class v = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) {
        v *= powers[k][e[k]];
        v %= mod;
      }
    acc += v;
  }
  acc %= mod;
  if (acc < 0)
    acc += mod;
  return acc;
}

std::vector<std::vector<mpz_class>> power_table(const std::vector<mpz_class> &x, int maxdeg, const mpz_class &mod) {
  std::vector<std::vector<mpz_class>> pw(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    pw[k].resize(static_cast<std::size_t>(maxdeg + 1));
    pw[k][0] = 1;
    for (int d = 1; d <= maxdeg; ++d)
      pw[k][d] = pw[k][d - 1] * x[k] % mod;
  }
  return pw;
}

// Solves a x = b modulo mod when a is invertible modulo the prime p dividing mod.
bool solve_mod(std::vector<std::vector<mpz_class>> a, std::vector<mpz_class> b, const mpz_class &mod,
               const mpz_class &p, std::vector<mpz_class> &x) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r][c] % p == 0)
      ++r;
    if (r == n)
      return false;
    std::swap(a[r], a[c]);
    std::swap(b[r], b[c]);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), a[c][c].get_mpz_t(), mod.get_mpz_t());
    for (std::size_t k = c; k < n; ++k)
      a[c][k] = a[c][k] * inv % mod;
    b[c] = b[c] * inv % mod;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0)
        continue;
      const mpz_class f = a[i][c];
      for (std::size_t k = c; k < n; ++k)
        a[i][k] = (a[i][k] - f * a[c][k]) % mod;
      b[i] = (b[i] - f * b[c]) % mod;
    }
  }
  x = std::move(b);
  for (auto &v : x)
    if (v < 0)
      v += mod;
  return true;
}

bool rational_reconstruct(const mpz_class &u, const mpz_class &mod, mpq_class &out) {
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), mpz_class(mod / 2).get_mpz_t());
  mpz_class r0 = mod, r1 = u % mod, t0 = 0, t1 = 1;
  if (r1 < 0)
    r1 += mod;
  while (r1 > bound) {
    const mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound)
    return false;
  mpz_class g = gcd(r1, t1);
  if (g != 1)
    return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

mpq_class eval_q(const QPoly &p, const std::vector<mpq_class> &full) {
  mpq_class acc = 0;
  for (const auto &t : p.terms()) {
    mpq_class v = t.c;
    for (int i = 0; i < p.nvars(); ++i)
      for (int k = 0; k < t.m.e[i]; ++k)
        v *= full[i];
    acc += v;
  }
  return acc;
}

enum class Lift { Rational, NotRational, Singular };

Lift lift_point(const std::vector<QPoly> &eqs, const std::vector<int> &vars, const std::vector<u64> &pt, u64 p,
                std::vector<mpq_class> &sol) {
  const std::size_t nv = vars.size();
  const int n = eqs.front().nvars();
  std::vector<ZPoly> f;
  int maxdeg = 1;
  for (const auto &e : eqs) {
    f.push_back(to_zpoly(e, vars));
    maxdeg = std::max(maxdeg, e.total_degree());
  }
  const mpz_class pz(static_cast<unsigned long>(p));
  std::vector<mpz_class> x(nv);
  for (std::size_t k = 0; k < nv; ++k)
    x[k] = static_cast<unsigned long>(pt[k]);

  // choose a square subsystem with Jacobian invertible mod p
  std::vector<std::vector<ZPoly>> jac(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t k = 0; k < nv; ++k)
      jac[i].push_back(zderiv(f[i], k));
  std::vector<std::size_t> rows;
  {
    auto pw = power_table(x, maxdeg, pz);
    std::vector<std::vector<u64>> basis; // echelon rows, with pivot columns
    std::vector<std::size_t> pcols;
    for (std::size_t i = 0; i < f.size() && rows.size() < nv; ++i) {
      std::vector<u64> r(nv);
      for (std::size_t k = 0; k < nv; ++k)
        r[k] = zeval(jac[i][k], pw, pz).get_ui();
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const u64 c = r[pcols[b]];
        if (c)
          for (std::size_t k = 0; k < nv; ++k)
            r[k] = (r[k] + p - mulmod(c, basis[b][k], p)) % p;
      }
      std::size_t pc = 0;
      while (pc < nv && r[pc] == 0)
        ++pc;
      if (pc == nv)
        continue;
      const u64 inv = invmod(r[pc], p);
      for (auto &c : r)
        c = mulmod(c, inv, p);
      basis.push_back(std::move(r));
      pcols.push_back(pc);
      rows.push_back(i);
    }
  }
  if (rows.size() < nv)
    return Lift::Singular;

  mpz_class mod = pz;
  std::vector<mpq_class> full(static_cast<std::size_t>(n));
  while (mpz_sizeinbase(mod.get_mpz_t(), 2) < kLiftBits) {
    mod *= mod;
    auto pw = power_table(x, maxdeg, mod);
    std::vector<std::vector<mpz_class>> a(nv, std::vector<mpz_class>(nv));
    std::vector<mpz_class> b(nv);
    for (std::size_t r = 0; r < nv; ++r) {
      b[r] = zeval(f[rows[r]], pw, mod);
      for (std::size_t k = 0; k < nv; ++k)
        a[r][k] = zeval(jac[rows[r]][k], pw, mod);
    }
    std::vector<mpz_class> d;
    if (!solve_mod(std::move(a), std::move(b), mod, pz, d))
      return Lift::Singular;
    bool all = true;
    for (std::size_t k = 0; k < nv; ++k) {
      x[k] = (x[k] - d[k]) % mod;
      if (x[k] < 0)
        x[k] += mod;
      mpq_class q;
      if (all && rational_reconstruct(x[k], mod, q))
        full[vars[k]] = q;
      else
        all = false;
    }
    if (!all)
      continue;
    bool ok = true;
    for (const auto &e : eqs)
      if (eval_q(e, full) != 0) {
        ok = false;
        break;
      }
    if (ok) {
      sol.clear();
      for (int v : vars)
        sol.push_back(full[v]);
      return Lift::Rational;
    }
  }
  return Lift::NotRational;
}

} // namespace

ModularPoints modular_points(const std::vector<QPoly> &eqs, int n, std::size_t max_pairs, std::size_t max_work) {
  ModularPoints out;
  out.vars = occurring(eqs, n);
  u64 p = kPrime;
  std::vector<ModPoly> reduced;
  for (int attempt = 0;; ++attempt) {
    reduced.clear();
    bool all = true;
    for (const auto &e : eqs) {
      bool ok = true;
      reduced.push_back(ModPoly::reduce(e, p, ok));
      all = all && ok;
    }
    if (all)
      break;
    mpz_class next;
    mpz_class cur(static_cast<unsigned long>(p - 1000003));
    mpz_nextprime(next.get_mpz_t(), cur.get_mpz_t());
    p = next.get_ui();
    if (attempt > 8) {
      out.status = ModularPoints::Failed;
      return out;
    }
  }
  bool aborted = false;
  auto g = groebner_mod(std::move(reduced), max_pairs, aborted, max_work);
  if (aborted) {
    out.status = ModularPoints::Failed;
    return out;
  }
  if (is_unit(g)) {
    out.status = ModularPoints::Ok;
    return out;
  }
  const int fv = free_variable(g, out.vars, n);
  if (fv >= 0) {
    out.status = ModularPoints::PositiveDim;
    out.free_var = fv;
    return out;
  }
  Enumeration en;
  std::vector<u64> cur(out.vars.size());
  enumerate(std::move(g), out.vars, 0, cur, n, p, max_pairs, max_work, en);
  if (en.failed) {
    out.status = ModularPoints::Failed;
    return out;
  }
  out.status = ModularPoints::Ok;
  for (const auto &pt : en.points) {
    std::vector<mpq_class> sol;
    switch (lift_point(eqs, out.vars, pt, p, sol)) {
    case Lift::Rational:
      out.points.push_back(std::move(sol));
      break;
    case Lift::NotRational:
      out.irrational = true;
      break;
    case Lift::Singular:
      out.singular = true;
      break;
    }
  }
  return out;
}

} // namespace logsplit::internal
