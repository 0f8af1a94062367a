#include "logsplit/polysystem.hpp"

#include "logsplit/linalg.hpp"
#include "logsplit/qroots.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace logsplit::internal {

namespace {

struct Pair {
  int i;
  int j;
  Mono lcm;
  unsigned sugar;
};

QPoly reduce_by(QPoly p, const std::vector<QPoly> &g, const std::vector<char> &active, int skip,
                std::size_t *work = nullptr, std::size_t limit = SIZE_MAX) {
  const int n = p.nvars();
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term &lt = p.lead();
    int found = -1;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (active[k] && static_cast<int>(k) != skip && g[k].lead().m.divides(lt.m, n)) {
        found = static_cast<int>(k);
        break;
      }
    if (found >= 0) {
      const mpq_class c = lt.c; // reducers are monic
      const Mono q = lt.m / g[found].lead().m;
      if (work) {
        *work += p.size() + g[found].size();
        if (*work > limit)
          break; // caller aborts
      }
      p.sub_mul_term(c, q, g[found]);
    } else {
      rem.push_back(lt);
      p.drop_lead();
    }
  }
  return QPoly::from_terms(n, std::move(rem));
}

} // namespace

QPoly normal_form(const QPoly &p, const std::vector<QPoly> &basis) {
  return reduce_by(p, basis, std::vector<char>(basis.size(), 1), -1);
}

std::vector<QPoly> groebner(std::vector<QPoly> polys, std::size_t max_pairs, bool &aborted, std::size_t max_work) {
  aborted = false;
  std::size_t work = 0;
  polys.erase(std::remove_if(polys.begin(), polys.end(), [](const QPoly &p) { return p.is_zero(); }),
              polys.end());
  if (polys.empty())
    return {};
  const int n = polys.front().nvars();
  std::vector<QPoly> g;
  std::vector<unsigned> sugar;
  std::vector<char> active;
  std::vector<Pair> pairs;

  // Gebauer-Moeller update for a new reduced, monic element h.
  auto update = [&](QPoly h, unsigned s) {
    const int hi = static_cast<int>(g.size());
    const Mono lh = h.lead().m;
    std::vector<Pair> c;
    for (int k = 0; k < hi; ++k)
      if (active[k]) {
        const Mono l = g[k].lead().m.lcm(lh, n);
        const unsigned sk = std::max<unsigned>(sugar[k] + (l.deg - g[k].lead().m.deg), s + (l.deg - lh.deg));
        c.push_back({k, hi, l, sk});
      }
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const bool coprime = g[c[a].i].lead().m.coprime(lh, n);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < c.size() && !dominated; ++b)
          dominated = c[b].lcm.divides(c[a].lcm, n);
        for (std::size_t b = 0; b < d.size() && !dominated; ++b)
          dominated = d[b].lcm.divides(c[a].lcm, n);
      }
      if (!dominated)
        d.push_back(c[a]);
    }
    std::vector<Pair> kept;
    for (const Pair &p : pairs) {
      const bool drop = lh.divides(p.lcm, n) &&
                        !mono_equal(g[p.i].lead().m.lcm(lh, n), p.lcm, n) &&
                        !mono_equal(g[p.j].lead().m.lcm(lh, n), p.lcm, n);
      if (!drop)
        kept.push_back(p);
    }
    for (const Pair &p : d)
      if (!g[p.i].lead().m.coprime(lh, n))
        kept.push_back(p);
    pairs = std::move(kept);
    for (int k = 0; k < hi; ++k)
      if (active[k] && lh.divides(g[k].lead().m, n))
        active[k] = 0;
    g.push_back(std::move(h));
    sugar.push_back(s);
    active.push_back(1);
  };

  std::sort(polys.begin(), polys.end(), [n](const QPoly &a, const QPoly &b) {
    return grevlex_cmp(a.lead().m, b.lead().m, n) < 0;
  });
  for (auto &p : polys) {
    QPoly h = reduce_by(p, g, active, -1, &work, max_work);
    if (work > max_work) {
      aborted = true;
      return {};
    }
    if (h.is_zero())
      continue;
    if (h.is_constant())
      return {QPoly(n, 1)};
    h = h.monic();
    const auto s = static_cast<unsigned>(h.total_degree());
    update(std::move(h), s);
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > max_pairs || work > max_work) {
      aborted = true;
      break;
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      if (pairs[k].sugar < pairs[best].sugar ||
          (pairs[k].sugar == pairs[best].sugar && grevlex_cmp(pairs[k].lcm, pairs[best].lcm, n) < 0))
        best = k;
    }
    const Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    QPoly s = g[p.i].mul_term(1, p.lcm / g[p.i].lead().m);
    s.sub_mul_term(1, p.lcm / g[p.j].lead().m, g[p.j]);
    QPoly h = reduce_by(std::move(s), g, active, -1, &work, max_work);
    if (work > max_work) {
      aborted = true;
      break;
    }
    if (h.is_zero())
      continue;
    if (h.is_constant())
      return {QPoly(n, 1)};
    update(h.monic(), p.sugar);
  }

  std::vector<QPoly> basis;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (active[k])
      basis.push_back(g[k]);
  // interreduce tails
  std::vector<char> all(basis.size(), 1);
  for (std::size_t k = 0; k < basis.size(); ++k)
    basis[k] = reduce_by(basis[k], basis, all, static_cast<int>(k)).monic();
  std::sort(basis.begin(), basis.end(), [n](const QPoly &a, const QPoly &b) {
    return grevlex_cmp(a.lead().m, b.lead().m, n) < 0;
  });
  return basis;
}

namespace {

struct Node {
  std::vector<QPoly> eqs;
  std::vector<std::pair<int, QPoly>> subs;
};

struct Ctx {
  int n;
  SolveOptions opts;
  SolveResult res;
  std::size_t branches = 0;
};

mpq_class eval_point(const QPoly &p, const std::vector<mpq_class> &x) {
  mpq_class acc = 0;
  for (const auto &t : p.terms()) {
    mpq_class v = t.c;
    for (int i = 0; i < p.nvars(); ++i)
      for (int k = 0; k < t.m.e[i]; ++k)
        v *= x[i];
    acc += v;
  }
  return acc;
}

// Single variable of p, -1 if constant, -2 if several.
int sole_variable(const QPoly &p) {
  int v = -1;
  for (const auto &t : p.terms())
    for (int i = 0; i < p.nvars(); ++i)
      if (t.m.e[i]) {
        if (v >= 0 && v != i)
          return -2;
        v = i;
      }
  return v;
}

UPoly to_univariate(const QPoly &p, int v) {
  std::vector<mpq_class> c(static_cast<std::size_t>(p.degree_in(v) + 1));
  for (const auto &t : p.terms())
    c[t.m.e[v]] += t.c;
  return UPoly(std::move(c));
}

void finish(Ctx &cx, const Node &nd) {
  std::vector<char> bound(static_cast<std::size_t>(cx.n), 0);
  for (const auto &s : nd.subs)
    bound[s.first] = 1;
  std::vector<int> free_vars;
  for (int i = 0; i < cx.n; ++i)
    if (!bound[i])
      free_vars.push_back(i);
  if (!free_vars.empty())
    cx.res.positive_dim = true;
  for (std::size_t sample = 0; sample <= free_vars.size(); ++sample) {
    std::vector<mpq_class> x(static_cast<std::size_t>(cx.n));
    if (sample > 0)
      x[free_vars[sample - 1]] = 1;
    for (auto it = nd.subs.rbegin(); it != nd.subs.rend(); ++it)
      x[it->first] = eval_point(it->second, x);
    cx.res.solutions.push_back(std::move(x));
  }
}

Node substitute_value(const Node &nd, int v, const mpq_class &r) {
  Node child;
  child.subs = nd.subs;
  child.subs.emplace_back(v, QPoly(nd.eqs.front().nvars(), r));
  for (const auto &e : nd.eqs)
    child.eqs.push_back(e.evaluate(v, r));
  return child;
}

// Minimal polynomial of variable v modulo a zero-dimensional basis.
bool minimal_polynomial(const std::vector<QPoly> &basis, int v, int n, UPoly &out) {
  std::vector<QPoly> nfs;
  const int cap = 64;
  QPoly power(n, 1);
  for (int j = 0; j <= cap; ++j) {
    nfs.push_back(normal_form(power, basis));
    // columns are the normal forms, rows the monomials that occur
    std::vector<Mono> monos;
    for (const auto &q : nfs)
      for (const auto &t : q.terms())
        if (std::none_of(monos.begin(), monos.end(), [&](const Mono &m) { return mono_equal(m, t.m, n); }))
          monos.push_back(t.m);
    QMatrix mat(static_cast<int>(monos.size()), j + 1);
    for (int c = 0; c <= j; ++c)
      for (const auto &t : nfs[c].terms())
        for (std::size_t r = 0; r < monos.size(); ++r)
          if (mono_equal(monos[r], t.m, n)) {
            mat.at(static_cast<int>(r), c) = t.c;
            break;
          }
    auto ker = kernel_basis(mat);
    if (!ker.empty()) {
      out = UPoly(ker.front());
      return true;
    }
    power = power * QPoly::variable(n, v);
  }
  return false;
}

void run(Ctx &cx, Node nd) {
  const int n = cx.n;
  bool gb_done = false;
  bool exact_gb = false;
  for (;;) {
    if (cx.branches > cx.opts.max_branches) {
      cx.res.cap_hit = true;
      return;
    }
    // normalize
    std::vector<QPoly> eqs;
    for (auto &e : nd.eqs) {
      if (e.is_zero())
        continue;
      if (e.is_constant())
        return;
      QPoly m = e.monic();
      if (std::find(eqs.begin(), eqs.end(), m) == eqs.end())
        eqs.push_back(std::move(m));
    }
    nd.eqs = std::move(eqs);
    if (nd.eqs.empty()) {
      finish(cx, nd);
      return;
    }

    // linear elimination
    int lin = -1;
    for (std::size_t k = 0; k < nd.eqs.size(); ++k)
      if (nd.eqs[k].total_degree() == 1 &&
          (lin < 0 || nd.eqs[k].size() < nd.eqs[lin].size()))
        lin = static_cast<int>(k);
    if (lin >= 0) {
      const QPoly &e = nd.eqs[lin];
      int v = 0;
      while (!e.lead().m.e[v])
        ++v;
      // e is monic: v + rest = 0
      QPoly expr = -(e - QPoly::variable(n, v));
      std::vector<QPoly> rest;
      for (std::size_t k = 0; k < nd.eqs.size(); ++k)
        if (static_cast<int>(k) != lin)
          rest.push_back(nd.eqs[k].substitute(v, expr));
      nd.eqs = std::move(rest);
      nd.subs.emplace_back(v, std::move(expr));
      gb_done = false;
      continue;
    }

    // univariate equation
    for (const auto &e : nd.eqs) {
      const int v = sole_variable(e);
      if (v < 0)
        continue;
      const UPoly u = to_univariate(e, v);
      const auto roots = rational_roots(u);
      if (squarefree_part(u).degree() > static_cast<int>(roots.size()))
        cx.res.irrational = true;
      for (const auto &r : roots) {
        ++cx.branches;
        run(cx, substitute_value(nd, v, r));
      }
      return;
    }

    // an equation divisible by a variable splits the variety
    for (std::size_t k = 0; k < nd.eqs.size(); ++k) {
      const QPoly &e = nd.eqs[k];
      int v = -1;
      for (int i = 0; i < n && v < 0; ++i) {
        bool all = true;
        for (const auto &t : e.terms())
          if (!t.m.e[i]) {
            all = false;
            break;
          }
        if (all)
          v = i;
      }
      if (v < 0)
        continue;
      ++cx.branches;
      run(cx, substitute_value(nd, v, 0));
      std::vector<Term> q;
      for (auto t : e.terms()) {
        t.m.e[v] -= 1;
        t.m.deg -= 1;
        q.push_back(t);
      }
      nd.eqs[k] = QPoly::from_terms(n, std::move(q));
      ++cx.branches;
      gb_done = false;
      goto next_iteration;
    }

    if (!gb_done && !exact_gb) {
      const ModularPoints mp = modular_points(nd.eqs, n, cx.opts.max_gb_pairs, cx.opts.max_gb_work);
      ++cx.res.gb_calls;
      if (mp.status == ModularPoints::PositiveDim) {
        cx.res.positive_dim = true;
        for (int s = 0; s <= 1; ++s) {
          ++cx.branches;
          run(cx, substitute_value(nd, mp.free_var, s));
        }
        return;
      }
      if (mp.status == ModularPoints::Ok) {
        cx.res.irrational = cx.res.irrational || mp.irrational;
        for (const auto &pt : mp.points) {
          Node child = nd;
          for (std::size_t k = 0; k < mp.vars.size(); ++k)
            child = substitute_value(child, mp.vars[k], pt[k]);
          ++cx.branches;
          run(cx, std::move(child));
        }
        if (!mp.singular)
          return;
        cx.res.singular = true;
      } else {
        cx.res.gb_aborted = true;
        return;
      }
      // multiple points: exact Groebner basis over Q
      exact_gb = true;
    }

    if (!gb_done) {
      bool aborted = false;
      ++cx.res.gb_calls;
      nd.eqs = groebner(nd.eqs, cx.opts.max_gb_pairs, aborted, cx.opts.max_gb_work);
      if (aborted) {
        cx.res.gb_aborted = true;
        return;
      }
      gb_done = true;
      continue;
    }

    {
      // zero-dimensional iff every occurring variable has a pure-power leading monomial
      std::vector<char> occurs(static_cast<std::size_t>(n), 0), pure(static_cast<std::size_t>(n), 0);
      for (const auto &e : nd.eqs) {
        for (const auto &t : e.terms())
          for (int i = 0; i < n; ++i)
            if (t.m.e[i])
              occurs[i] = 1;
        const int v = sole_variable(QPoly::term(n, e.lead().m, 1));
        if (v >= 0)
          pure[v] = 1;
      }
      int free_var = -1, first = -1;
      for (int i = 0; i < n; ++i) {
        if (!occurs[i])
          continue;
        if (first < 0)
          first = i;
        if (!pure[i] && free_var < 0)
          free_var = i;
      }
      if (free_var >= 0) {
        cx.res.positive_dim = true;
        for (int s = 0; s <= 1; ++s) {
          ++cx.branches;
          run(cx, substitute_value(nd, free_var, s));
        }
        return;
      }
      UPoly mp;
      if (!minimal_polynomial(nd.eqs, first, n, mp)) {
        cx.res.gb_aborted = true;
        return;
      }
      const auto roots = rational_roots(mp);
      if (squarefree_part(mp).degree() > static_cast<int>(roots.size()))
        cx.res.irrational = true;
      for (const auto &r : roots) {
        ++cx.branches;
        run(cx, substitute_value(nd, first, r));
      }
      return;
    }
  next_iteration:;
  }
}

} // namespace

SolveResult solve_rational(const std::vector<QPoly> &eqs, int nvars, const SolveOptions &opts) {
  Ctx cx{nvars, opts, {}, 0};
  Node root;
  for (const auto &e : eqs) {
    if (e.nvars() != nvars)
      throw std::invalid_argument("solve_rational: variable count mismatch");
    root.eqs.push_back(e);
  }
  if (root.eqs.empty())
    root.eqs.push_back(QPoly(nvars));
  run(cx, std::move(root));
  cx.res.branches = cx.branches;
  auto &sols = cx.res.solutions;
  std::sort(sols.begin(), sols.end());
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
  return cx.res;
}

} // namespace logsplit::internal
