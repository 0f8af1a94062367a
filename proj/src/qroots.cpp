#include "logsplit/qroots.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace logsplit {
namespace {

// Integer coefficient vector, lowest degree first.
using ZPoly = std::vector<mpz_class>;

ZPoly to_primitive_integer(const UPoly &p) {
  mpz_class den = 1;
  for (const auto &q : p.coeffs())
    den = lcm(den, mpz_class(q.get_den()));
  ZPoly z;
  z.reserve(p.coeffs().size());
  mpz_class g = 0;
  for (const auto &q : p.coeffs()) {
    mpz_class v = q.get_num() * (den / q.get_den());
    g = gcd(g, v);
    z.push_back(v);
  }
  if (g != 0 && g != 1)
    for (auto &v : z)
      v /= g;
  return z;
}

bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// Arithmetic for small polynomials over Z/p.
using Fp = std::vector<std::int64_t>;

void fp_trim(Fp &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

std::int64_t fp_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Fp fp_mod(Fp a, const Fp &b, std::int64_t p) {
  const std::int64_t inv = fp_pow(b.back(), p - 2, p);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    std::int64_t f = a.back() * inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j)
      a[shift + j] = ((a[shift + j] - f * b[j]) % p + p) % p;
    fp_trim(a);
  }
  return a;
}

std::size_t fp_gcd_degree(Fp a, Fp b, std::int64_t p) {
  while (!b.empty()) {
    Fp r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

std::int64_t fp_eval(const Fp &a, std::int64_t x, std::int64_t p) {
  std::int64_t acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it)
    acc = (acc * x + *it) % p;
  return acc;
}

mpz_class zeval(const ZPoly &a, const mpz_class &x) {
  mpz_class acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

mpz_class modp(const mpz_class &v, const mpz_class &m) {
  mpz_class r = v % m;
  if (r < 0)
    r += m;
  return r;
}

// Integer roots of a monic square-free integer polynomial.
std::vector<mpz_class> integer_roots_monic(const ZPoly &g) {
  const std::size_t n = g.size() - 1;
  std::vector<mpz_class> roots;
  if (n == 0)
    return roots;
  if (n == 1) {
    roots.push_back(-g[0]);
    return roots;
  }
  mpz_class bound = 0;
  for (std::size_t i = 0; i < n; ++i)
    bound = std::max(bound, mpz_class(abs(g[i])));
  bound += 1;

  ZPoly dg(n);
  for (std::size_t i = 1; i <= n; ++i)
    dg[i - 1] = g[i] * static_cast<unsigned long>(i);

  for (std::int64_t p = 3; p < 200000; p += 2) {
    if (!is_prime(p))
      continue;
    Fp gp(n + 1), dp(n);
    for (std::size_t i = 0; i <= n; ++i)
      gp[i] = modp(g[i], p).get_si();
    for (std::size_t i = 0; i < n; ++i)
      dp[i] = modp(dg[i], p).get_si();
    fp_trim(dp);
    if (dp.size() != n) // derivative degree dropped mod p
      continue;
    if (fp_gcd_degree(gp, dp, p) != 0)
      continue;

    std::vector<std::int64_t> residues;
    for (std::int64_t x = 0; x < p && residues.size() < n; ++x)
      if (fp_eval(gp, x, p) == 0)
        residues.push_back(x);

    for (std::int64_t r0 : residues) {
      mpz_class r = r0;
      mpz_class mod = p;
      while (mod <= 2 * bound) {
        mpz_class next = mod * mod;
        mpz_class inv;
        mpz_class d = modp(zeval(dg, r), next);
        if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), next.get_mpz_t()) == 0)
          throw std::logic_error("rational_roots: Hensel step lost invertibility");
        r = modp(r - zeval(g, r) * inv, next);
        mod = next;
      }
      if (r > mod / 2)
        r -= mod;
      if (zeval(g, r) == 0)
        roots.push_back(r);
    }
    return roots;
  }
  throw std::runtime_error("rational_roots: no suitable prime found");
}

} // namespace

std::vector<mpq_class> rational_roots(const UPoly &p) {
  if (p.is_zero())
    throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<mpq_class> out;
  UPoly s = squarefree_part(p);
  if (s.constant_term() == 0) {
    out.push_back(0);
    s = s.exact_div(UPoly::variable());
  }
  if (s.degree() >= 1) {
    ZPoly z = to_primitive_integer(s);
    const std::size_t n = z.size() - 1;
    const mpz_class a = z[n];
    // G(y) = a^(n-1) g(y / a) is monic with integer coefficients.
    ZPoly G(n + 1);
    mpz_class pw = 1;
    for (std::size_t i = n; i-- > 0;) {
      G[i] = z[i] * pw;
      pw *= a;
    }
    G[n] = 1;
    for (const auto &r : integer_roots_monic(G)) {
      mpq_class q(r, a);
      q.canonicalize();
      out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool has_irrational_roots(const UPoly &p) {
  UPoly s = squarefree_part(p);
  return static_cast<std::size_t>(std::max(0, s.degree())) > rational_roots(p).size();
}

} // namespace logsplit
