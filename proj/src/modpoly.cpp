#include "logsplit/modpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace logsplit::internal {

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0)
    throw std::domain_error("invmod: zero");
  return powmod(a, p - 2, p);
}

namespace {

u64 addm(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}
u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 reduce_mpz(const mpz_class &z, u64 p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

} // namespace

ModPoly ModPoly::reduce(const QPoly &q, u64 p, bool &ok) {
  ok = true;
  ModPoly r(q.nvars(), p);
  for (const auto &t : q.terms()) {
    const u64 d = reduce_mpz(t.c.get_den(), p);
    if (d == 0) {
      ok = false;
      return r;
    }
    const u64 c = mulmod(reduce_mpz(t.c.get_num(), p), invmod(d, p), p);
    if (c)
      r.t_.push_back({t.m, c});
  }
  return r;
}

ModPoly ModPoly::from_terms(int nvars, u64 p, std::vector<ModTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [nvars](const ModTerm &a, const ModTerm &b) { return grevlex_cmp(a.m, b.m, nvars) > 0; });
  ModPoly r(nvars, p);
  for (auto &t : terms) {
    t.c %= p;
    if (!r.t_.empty() && mono_equal(r.t_.back().m, t.m, nvars)) {
      r.t_.back().c = addm(r.t_.back().c, t.c, p);
      if (r.t_.back().c == 0)
        r.t_.pop_back();
    } else if (t.c) {
      r.t_.push_back(t);
    }
  }
  return r;
}

ModPoly ModPoly::monic() const {
  if (t_.empty())
    return *this;
  const u64 inv = invmod(t_.front().c, p_);
  ModPoly r = *this;
  for (auto &t : r.t_)
    t.c = mulmod(t.c, inv, p_);
  return r;
}

ModPoly ModPoly::mul_term(u64 c, const Mono &m) const {
  ModPoly r(n_, p_);
  if (c % p_ == 0)
    return r;
  r.t_.reserve(t_.size());
  for (const auto &t : t_)
    r.t_.push_back({t.m * m, mulmod(t.c, c, p_)});
  return r;
}

void ModPoly::sub_mul_term(u64 c, const Mono &m, const ModPoly &o) {
  if (c % p_ == 0 || o.t_.empty())
    return;
  std::vector<ModTerm> out;
  out.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  const u64 nc = p_ - c % p_;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size()) {
      out.push_back(t_[i++]);
      continue;
    }
    ModTerm s{o.t_[j].m * m, mulmod(o.t_[j].c, nc, p_)};
    if (i == t_.size()) {
      out.push_back(s);
      ++j;
      continue;
    }
    const int cmp = grevlex_cmp(t_[i].m, s.m, n_);
    if (cmp > 0) {
      out.push_back(t_[i++]);
    } else if (cmp < 0) {
      out.push_back(s);
      ++j;
    } else {
      const u64 v = addm(t_[i].c, s.c, p_);
      if (v)
        out.push_back({s.m, v});
      ++i;
      ++j;
    }
  }
  t_ = std::move(out);
}

void ModPoly::drop_lead() { t_.erase(t_.begin()); }

ModPoly ModPoly::evaluate(int var, u64 v) const {
  std::vector<ModTerm> out;
  for (auto t : t_) {
    t.c = mulmod(t.c, powmod(v, t.m.e[var], p_), p_);
    t.m.deg = static_cast<std::uint16_t>(t.m.deg - t.m.e[var]);
    t.m.e[var] = 0;
    out.push_back(t);
  }
  return from_terms(n_, p_, std::move(out));
}

namespace {

struct Pair {
  int i;
  int j;
  Mono lcm;
  unsigned sugar;
};

ModPoly reduce_by(ModPoly p, const std::vector<ModPoly> &g, const std::vector<char> &active, int skip,
                  std::size_t *work = nullptr, std::size_t limit = SIZE_MAX) {
  const int n = p.nvars();
  std::vector<ModTerm> rem;
  while (!p.is_zero()) {
    const ModTerm lt = p.lead();
    int found = -1;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (active[k] && static_cast<int>(k) != skip && g[k].lead().m.divides(lt.m, n)) {
        found = static_cast<int>(k);
        break;
      }
    if (found >= 0) {
      if (work) {
        *work += p.size() + g[found].size();
        if (*work > limit)
          break; // caller aborts
      }
      p.sub_mul_term(lt.c, lt.m / g[found].lead().m, g[found]);
    } else {
      rem.push_back(lt);
      p.drop_lead();
    }
  }
  return ModPoly::from_terms(n, p.prime(), std::move(rem));
}

} // namespace

ModPoly normal_form_mod(const ModPoly &f, const std::vector<ModPoly> &basis) {
  return reduce_by(f, basis, std::vector<char>(basis.size(), 1), -1);
}

std::vector<ModPoly> groebner_mod(std::vector<ModPoly> polys, std::size_t max_pairs, bool &aborted,
                                  std::size_t max_work) {
  aborted = false;
  std::size_t work = 0;
  polys.erase(std::remove_if(polys.begin(), polys.end(), [](const ModPoly &p) { return p.is_zero(); }),
              polys.end());
  if (polys.empty())
    return {};
  const int n = polys.front().nvars();
  const u64 pr = polys.front().prime();
  auto unit = [&] {
    return std::vector<ModPoly>{ModPoly::from_terms(n, pr, {ModTerm{Mono{}, 1}})};
  };
  std::vector<ModPoly> g;
  std::vector<unsigned> sugar;
  std::vector<char> active;
  std::vector<Pair> pairs;

  auto update = [&](ModPoly h, unsigned s) {
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
      const bool drop = lh.divides(p.lcm, n) && !mono_equal(g[p.i].lead().m.lcm(lh, n), p.lcm, n) &&
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

  std::sort(polys.begin(), polys.end(),
            [n](const ModPoly &a, const ModPoly &b) { return grevlex_cmp(a.lead().m, b.lead().m, n) < 0; });
  for (auto &p : polys) {
    ModPoly h = reduce_by(p, g, active, -1, &work, max_work);
    if (work > max_work) {
      aborted = true;
      return {};
    }
    if (h.is_zero())
      continue;
    if (h.is_constant())
      return unit();
    update(h.monic(), static_cast<unsigned>(h.total_degree()));
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > max_pairs || work > max_work) {
      aborted = true;
      break;
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (pairs[k].sugar < pairs[best].sugar ||
          (pairs[k].sugar == pairs[best].sugar && grevlex_cmp(pairs[k].lcm, pairs[best].lcm, n) < 0))
        best = k;
    const Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    ModPoly s = g[p.i].mul_term(1, p.lcm / g[p.i].lead().m);
    s.sub_mul_term(1, p.lcm / g[p.j].lead().m, g[p.j]);
    ModPoly h = reduce_by(std::move(s), g, active, -1, &work, max_work);
    if (work > max_work) {
      aborted = true;
      break;
    }
    if (h.is_zero())
      continue;
    if (h.is_constant())
      return unit();
    update(h.monic(), p.sugar);
  }

  std::vector<ModPoly> basis;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (active[k])
      basis.push_back(g[k]);
  std::vector<char> all(basis.size(), 1);
  for (std::size_t k = 0; k < basis.size(); ++k)
    basis[k] = reduce_by(basis[k], basis, all, static_cast<int>(k)).monic();
  std::sort(basis.begin(), basis.end(),
            [n](const ModPoly &a, const ModPoly &b) { return grevlex_cmp(a.lead().m, b.lead().m, n) < 0; });
  return basis;
}

// Dense univariate arithmetic over F_p, coefficients low degree first.
namespace {

using Dense = std::vector<u64>;

void trim(Dense &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

Dense dmod(Dense a, const Dense &b, u64 p) {
  trim(a);
  const u64 inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 c = mulmod(a.back(), inv, p);
    const std::size_t sh = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[sh + i] = subm(a[sh + i], mulmod(c, b[i], p), p);
    trim(a);
  }
  return a;
}

Dense dmulmod(const Dense &a, const Dense &b, const Dense &f, u64 p) {
  if (a.empty() || b.empty())
    return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] = addm(r[i + j], mulmod(a[i], b[j], p), p);
  return dmod(std::move(r), f, p);
}

Dense dgcd(Dense a, Dense b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = dmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const u64 inv = invmod(a.back(), p);
    for (auto &c : a)
      c = mulmod(c, inv, p);
  }
  return a;
}

Dense dpow(Dense base, u64 e, const Dense &f, u64 p) {
  Dense r{1};
  base = dmod(std::move(base), f, p);
  while (e) {
    if (e & 1)
      r = dmulmod(r, base, f, p);
    base = dmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Dense ddiv(Dense a, const Dense &b, u64 p) {
  trim(a);
  if (a.size() < b.size())
    return {};
  Dense q(a.size() - b.size() + 1, 0);
  const u64 inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 c = mulmod(a.back(), inv, p);
    const std::size_t sh = a.size() - b.size();
    q[sh] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[sh + i] = subm(a[sh + i], mulmod(c, b[i], p), p);
    a.pop_back();
    trim(a);
    if (a.size() < b.size())
      break;
  }
  return q;
}

// g is a monic product of distinct linear factors.
void split_linear(const Dense &g, u64 p, std::mt19937_64 &rng, std::vector<u64> &out) {
  if (g.size() <= 1)
    return;
  if (g.size() == 2) {
    out.push_back(subm(0, g[0], p));
    return;
  }
  if (p == 2) {
    for (u64 v = 0; v < 2; ++v) {
      u64 acc = 0;
      for (std::size_t i = g.size(); i-- > 0;)
        acc = addm(mulmod(acc, v, p), g[i], p);
      if (acc == 0)
        out.push_back(v);
    }
    return;
  }
  for (;;) {
    const u64 d = rng() % p;
    Dense w = dpow(Dense{d, 1}, (p - 1) / 2, g, p);
    if (w.empty())
      w = {0};
    w[0] = subm(w[0], 1, p);
    Dense a = dgcd(g, w, p);
    if (a.size() > 1 && a.size() < g.size()) {
      split_linear(a, p, rng, out);
      split_linear(ddiv(g, a, p), p, rng, out);
      return;
    }
  }
}

} // namespace

std::vector<u64> roots_mod(std::vector<u64> f, u64 p) {
  for (auto &c : f)
    c %= p;
  trim(f);
  if (f.size() <= 1)
    return {};
  // gcd with x^p - x keeps the distinct linear factors
  Dense xp = dpow(Dense{0, 1}, p, f, p);
  if (xp.size() < 2)
    xp.resize(2, 0);
  xp[1] = subm(xp[1], 1, p);
  trim(xp);
  Dense g = dgcd(f, xp, p);
  std::vector<u64> out;
  std::mt19937_64 rng(0x5eed);
  split_linear(g, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace logsplit::internal
