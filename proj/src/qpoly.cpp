#include "logsplit/qpoly.hpp"

#include "logsplit/upoly.hpp"

#include <algorithm>
#include <cstring>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace logsplit::internal {

Mono Mono::var(int i, int power) {
  if (i < 0 || i >= kMaxVars)
    throw std::out_of_range("Mono: variable index out of range");
  if (power < 0 || power > 255)
    throw std::overflow_error("Mono: exponent out of range");
  Mono m;
  m.e[i] = static_cast<std::uint8_t>(power);
  m.deg = static_cast<std::uint16_t>(power);
  return m;
}

bool Mono::divides(const Mono &o, int n) const {
  if (deg > o.deg)
    return false;
  for (int i = 0; i < n; ++i)
    if (e[i] > o.e[i])
      return false;
  return true;
}

Mono Mono::operator*(const Mono &o) const {
  Mono r;
  if (deg + o.deg <= 255) {
    for (int i = 0; i < kMaxVars; ++i)
      r.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
    r.deg = static_cast<std::uint16_t>(deg + o.deg);
    return r;
  }
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = static_cast<unsigned>(e[i]) + o.e[i];
    if (s > 255)
      throw std::overflow_error("Mono: exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  r.deg = static_cast<std::uint16_t>(deg + o.deg);
  return r;
}

Mono Mono::operator/(const Mono &o) const {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i)
    r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
  r.deg = static_cast<std::uint16_t>(deg - o.deg);
  return r;
}

Mono Mono::lcm(const Mono &o, int n) const {
  Mono r;
  unsigned d = 0;
  for (int i = 0; i < n; ++i) {
    r.e[i] = std::max(e[i], o.e[i]);
    d += r.e[i];
  }
  r.deg = static_cast<std::uint16_t>(d);
  return r;
}

bool Mono::coprime(const Mono &o, int n) const {
  for (int i = 0; i < n; ++i)
    if (e[i] && o.e[i])
      return false;
  return true;
}

bool mono_equal(const Mono &a, const Mono &b, int n) {
  return a.deg == b.deg && std::memcmp(a.e.data(), b.e.data(), static_cast<std::size_t>(n)) == 0;
}

int grevlex_cmp(const Mono &a, const Mono &b, int n) {
  if (a.deg != b.deg)
    return a.deg < b.deg ? -1 : 1;
  for (int i = n - 1; i >= 0; --i)
    if (a.e[i] != b.e[i])
      return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

QPoly::QPoly(int nvars, const mpq_class &c) : n_(nvars) {
  if (c != 0)
    t_.push_back({Mono{}, c});
}

QPoly QPoly::variable(int nvars, int i) {
  QPoly p(nvars);
  p.t_.push_back({Mono::var(i), mpq_class(1)});
  return p;
}

QPoly QPoly::term(int nvars, const Mono &m, const mpq_class &c) {
  QPoly p(nvars);
  if (c != 0)
    p.t_.push_back({m, c});
  return p;
}

QPoly QPoly::from_terms(int nvars, std::vector<Term> terms) {
  QPoly p(nvars);
  p.t_ = std::move(terms);
  p.sort_and_merge();
  return p;
}

void QPoly::sort_and_merge() {
  const int n = n_;
  std::sort(t_.begin(), t_.end(),
            [n](const Term &a, const Term &b) { return grevlex_cmp(a.m, b.m, n) > 0; });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto &t : t_) {
    if (!out.empty() && mono_equal(out.back().m, t.m, n))
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (out.back().c == 0)
      out.pop_back();
  }
  // A zero sum can expose an equal neighbour; one more pass settles it.
  std::vector<Term> fin;
  fin.reserve(out.size());
  for (auto &t : out) {
    if (!fin.empty() && mono_equal(fin.back().m, t.m, n)) {
      fin.back().c += t.c;
      if (fin.back().c == 0)
        fin.pop_back();
    } else {
      fin.push_back(std::move(t));
    }
  }
  t_ = std::move(fin);
}

int QPoly::total_degree() const {
  int d = -1;
  for (const auto &t : t_)
    d = std::max(d, static_cast<int>(t.m.deg));
  return d;
}

int QPoly::degree_in(int var) const {
  int d = t_.empty() ? -1 : 0;
  for (const auto &t : t_)
    d = std::max(d, static_cast<int>(t.m.e[var]));
  return d;
}

int QPoly::main_variable() const {
  int v = -1;
  for (const auto &t : t_)
    for (int i = n_ - 1; i > v; --i)
      if (t.m.e[i]) {
        v = i;
        break;
      }
  return v;
}

mpq_class QPoly::constant_coeff() const {
  if (!t_.empty() && t_.back().m.deg == 0)
    return t_.back().c;
  return 0;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto &t : r.t_)
    t.c = -t.c;
  return r;
}

namespace {

// out = a + s * b (s = +1 or -1), merging sorted term lists.
std::vector<Term> merge_add(const std::vector<Term> &a, const std::vector<Term> &b, int n, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = grevlex_cmp(a[i].m, b[j].m, n);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].m, subtract ? mpq_class(-b[j].c) : b[j].c});
      ++j;
    } else {
      mpq_class s = subtract ? mpq_class(a[i].c - b[j].c) : mpq_class(a[i].c + b[j].c);
      if (s != 0)
        out.push_back({a[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

QPoly &QPoly::operator+=(const QPoly &o) {
  if (o.t_.empty())
    return *this;
  n_ = std::max(n_, o.n_);
  t_ = merge_add(t_, o.t_, n_, false);
  return *this;
}

QPoly &QPoly::operator-=(const QPoly &o) {
  if (o.t_.empty())
    return *this;
  n_ = std::max(n_, o.n_);
  t_ = merge_add(t_, o.t_, n_, true);
  return *this;
}

QPoly &QPoly::operator*=(const mpq_class &s) {
  if (s == 0) {
    t_.clear();
    return *this;
  }
  for (auto &t : t_)
    t.c *= s;
  return *this;
}

QPoly operator*(const QPoly &a, const QPoly &b) {
  const int n = std::max(a.n_, b.n_);
  if (a.t_.empty() || b.t_.empty())
    return QPoly(n);
  if (a.t_.size() == 1)
    return b.mul_term(a.t_[0].c, a.t_[0].m);
  if (b.t_.size() == 1)
    return a.mul_term(b.t_[0].c, b.t_[0].m);
  std::vector<Term> prod;
  prod.reserve(a.t_.size() * b.t_.size());
  for (const auto &x : a.t_)
    for (const auto &y : b.t_)
      prod.push_back({x.m * y.m, x.c * y.c});
  return QPoly::from_terms(n, std::move(prod));
}

bool operator==(const QPoly &a, const QPoly &b) {
  if (a.t_.size() != b.t_.size())
    return false;
  const int n = std::max(a.n_, b.n_);
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (!mono_equal(a.t_[i].m, b.t_[i].m, n) || a.t_[i].c != b.t_[i].c)
      return false;
  return true;
}

QPoly QPoly::mul_term(const mpq_class &c, const Mono &m) const {
  QPoly r(n_);
  if (c == 0)
    return r;
  r.t_.reserve(t_.size());
  for (const auto &t : t_)
    r.t_.push_back({t.m * m, t.c * c});
  return r;
}

void QPoly::sub_mul_term(const mpq_class &c, const Mono &m, const QPoly &o) {
  if (c == 0 || o.t_.empty())
    return;
  std::vector<Term> out;
  out.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  Mono cur;
  bool have = false;
  while (i < t_.size() || j < o.t_.size()) {
    if (j < o.t_.size() && !have) {
      cur = o.t_[j].m * m;
      have = true;
    }
    int cmp;
    if (i == t_.size())
      cmp = -1;
    else if (!have)
      cmp = 1;
    else
      cmp = grevlex_cmp(t_[i].m, cur, n_);
    if (cmp > 0) {
      out.push_back(std::move(t_[i++]));
    } else if (cmp < 0) {
      out.push_back({cur, mpq_class(-(c * o.t_[j].c))});
      ++j;
      have = false;
    } else {
      t_[i].c -= c * o.t_[j].c;
      if (t_[i].c != 0)
        out.push_back(std::move(t_[i]));
      ++i;
      ++j;
      have = false;
    }
  }
  t_ = std::move(out);
}

void QPoly::drop_lead() {
  if (!t_.empty())
    t_.erase(t_.begin());
}

QPoly QPoly::monic() const {
  if (t_.empty() || t_[0].c == 1)
    return *this;
  QPoly r = *this;
  r *= mpq_class(1 / t_[0].c);
  return r;
}

QPoly QPoly::primitive_integer() const {
  if (t_.empty())
    return *this;
  mpz_class den = 1, g = 0;
  for (const auto &t : t_)
    den = lcm(den, mpz_class(t.c.get_den()));
  for (const auto &t : t_)
    g = gcd(g, mpz_class(t.c.get_num() * (den / t.c.get_den())));
  mpq_class s(den, g);
  s.canonicalize();
  if (t_[0].c < 0)
    s = -s;
  QPoly r = *this;
  r *= s;
  return r;
}

QPoly QPoly::derivative(int var) const {
  std::vector<Term> out;
  for (const auto &t : t_) {
    if (!t.m.e[var])
      continue;
    Term d = t;
    d.c *= static_cast<long>(t.m.e[var]);
    d.m.e[var] -= 1;
    d.m.deg -= 1;
    out.push_back(std::move(d));
  }
  // Differentiation preserves grevlex order between surviving terms except
  // in rare ties; re-sorting keeps the invariant unconditionally.
  return from_terms(n_, std::move(out));
}

QPoly QPoly::pow(unsigned k) const {
  QPoly result(n_, mpq_class(1));
  QPoly base = *this;
  while (k) {
    if (k & 1u)
      result = result * base;
    k >>= 1u;
    if (k)
      base = base * base;
  }
  return result;
}

std::vector<QPoly> QPoly::coefficients_in(int var) const {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(0, degree_in(var))) + 1);
  for (const auto &t : t_) {
    Term s = t;
    const int k = s.m.e[var];
    s.m.deg -= s.m.e[var];
    s.m.e[var] = 0;
    buckets[k].push_back(std::move(s));
  }
  std::vector<QPoly> out;
  out.reserve(buckets.size());
  for (auto &b : buckets)
    out.push_back(from_terms(n_, std::move(b)));
  while (!out.empty() && out.back().is_zero())
    out.pop_back();
  return out;
}

QPoly QPoly::from_coefficients_in(int nvars, int var, const std::vector<QPoly> &cs) {
  std::vector<Term> all;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const Mono vk = Mono::var(var, static_cast<int>(k));
    for (const auto &t : cs[k].terms())
      all.push_back({t.m * vk, t.c});
  }
  return from_terms(nvars, std::move(all));
}

QPoly QPoly::substitute(int var, const QPoly &s) const {
  if (!uses(var))
    return *this;
  auto cs = coefficients_in(var);
  QPoly acc(n_);
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc = acc * s;
    acc += *it;
  }
  return acc;
}

QPoly QPoly::evaluate(int var, const mpq_class &v) const {
  if (!uses(var))
    return *this;
  std::vector<Term> out;
  out.reserve(t_.size());
  for (const auto &t : t_) {
    Term s = t;
    const int k = s.m.e[var];
    if (k) {
      mpq_class p = 1;
      for (int i = 0; i < k; ++i)
        p *= v;
      s.c *= p;
      s.m.deg -= k;
      s.m.e[var] = 0;
    }
    if (s.c != 0)
      out.push_back(std::move(s));
  }
  return from_terms(n_, std::move(out));
}

std::string QPoly::to_string() const {
  if (t_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &t : t_) {
    if (!first)
      os << " + ";
    first = false;
    os << t.c.get_str();
    for (int i = 0; i < n_; ++i)
      if (t.m.e[i])
        os << "*z" << i << (t.m.e[i] > 1 ? "^" + std::to_string(t.m.e[i]) : "");
  }
  return os.str();
}

bool try_divide(const QPoly &a, const QPoly &b, QPoly &quotient) {
  if (b.is_zero())
    throw std::invalid_argument("QPoly: division by zero");
  const int n = std::max(a.nvars(), b.nvars());
  QPoly r = a;
  std::vector<Term> q;
  const Term &lb = b.lead();
  const mpq_class inv = 1 / lb.c;
  while (!r.is_zero()) {
    const Term &lr = r.lead();
    if (!lb.m.divides(lr.m, n))
      return false;
    Term t{lr.m / lb.m, lr.c * inv};
    r.sub_mul_term(t.c, t.m, b);
    q.push_back(std::move(t));
  }
  quotient = QPoly::from_terms(n, std::move(q));
  return true;
}

QPoly exact_divide(const QPoly &a, const QPoly &b) {
  QPoly q;
  if (!try_divide(a, b, q))
    throw std::logic_error("QPoly: inexact division");
  return q;
}

namespace {

QPoly content_in(const QPoly &p, int var);

QPoly primitive_part_in(const QPoly &p, int var) {
  QPoly c = content_in(p, var);
  QPoly q = c.is_constant() ? p : exact_divide(p, c);
  return q.primitive_integer();
}

// Image of p in Q[x_var] after substituting pt for the other variables.
UPoly univariate_image(const QPoly &p, int var, const std::vector<mpq_class> &pt) {
  std::vector<mpq_class> c(static_cast<std::size_t>(p.degree_in(var) + 1));
  for (const auto &t : p.terms()) {
    mpq_class v = t.c;
    for (int i = 0; i < p.nvars(); ++i)
      if (i != var)
        for (int k = 0; k < t.m.e[i]; ++k)
          v *= pt[i];
    c[t.m.e[var]] += v;
  }
  return UPoly(std::move(c));
}

// Upper bound for deg_var gcd(a, b): the degree of the gcd of images at a
// point where the leading coefficient of a in var does not vanish, which
// preserves the degree of every divisor of a. Returns -1 if no point was found.
int gcd_degree_bound(const QPoly &a, const QPoly &b, int var) {
  const int n = a.nvars();
  const int da = a.degree_in(var), db = b.degree_in(var);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<mpq_class> pt(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      pt[i] = 2 + ((i * 7 + attempt * 13) % 29) + attempt;
    const UPoly ia = univariate_image(a, var, pt), ib = univariate_image(b, var, pt);
    if (ia.degree() != da || ib.degree() != db)
      continue;
    return logsplit::gcd(ia, ib).degree();
  }
  return -1;
}

QPoly pseudo_remainder(const QPoly &a, const QPoly &b, int var) {
  const int n = a.nvars();
  std::vector<QPoly> A = a.coefficients_in(var);
  const std::vector<QPoly> B = b.coefficients_in(var);
  const std::size_t db = B.size() - 1;
  const QPoly &lb = B.back();
  while (!A.empty() && A.size() - 1 >= db) {
    const QPoly la = A.back();
    const std::size_t k = A.size() - 1 - db;
    for (auto &c : A)
      c = c * lb;
    for (std::size_t i = 0; i <= db; ++i)
      A[i + k] -= la * B[i];
    while (!A.empty() && A.back().is_zero())
      A.pop_back();
  }
  return QPoly::from_coefficients_in(n, var, A);
}

// Heuristic gcd over Z: evaluate the main variable at a large integer xi,
// recurse, and read the candidate back from its balanced xi-adic digits.
// A candidate dividing both inputs is the gcd when xi exceeds twice the
// smaller height. Inputs have integer coefficients; the result carries the
// gcd of the integer contents.
constexpr std::size_t kHeuristicBits = 40000;

mpz_class height(const QPoly &p) {
  mpz_class h = 0;
  for (const auto &t : p.terms())
    h = std::max(h, mpz_class(abs(t.c.get_num())));
  return h;
}

mpz_class integer_content(const QPoly &p) {
  mpz_class g = 0;
  for (const auto &t : p.terms())
    g = gcd(g, mpz_class(t.c.get_num()));
  return g;
}

std::optional<QPoly> heuristic_gcd(QPoly a, QPoly b) {
  const int n = std::max(a.nvars(), b.nvars());
  // an image can vanish when xi is a root
  if (a.is_zero())
    return b;
  if (b.is_zero())
    return a;
  const mpz_class ca = integer_content(a), cb = integer_content(b);
  const mpz_class cg = gcd(ca, cb);
  a *= mpq_class(1, 1) / mpq_class(ca);
  b *= mpq_class(1, 1) / mpq_class(cb);
  const int v = std::max(a.main_variable(), b.main_variable());
  if (v < 0)
    return QPoly(n, mpq_class(cg));
  const int d = std::max(a.degree_in(v), b.degree_in(v));
  mpz_class xi = 2 * std::min(height(a), height(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(d + 1) > kHeuristicBits)
      return std::nullopt;
    auto g_image = heuristic_gcd(a.evaluate(v, mpq_class(xi)), b.evaluate(v, mpq_class(xi)));
    if (!g_image)
      return std::nullopt;
    // balanced digits, one coefficient polynomial per power of x_v
    std::vector<Term> terms;
    QPoly rest = *g_image;
    const mpz_class half = xi / 2;
    for (int e = 0; !rest.is_zero(); ++e) {
      if (e > 255)
        return std::nullopt;
      std::vector<Term> digit;
      for (const auto &t : rest.terms()) {
        mpz_class r = t.c.get_num() % xi;
        if (r < 0)
          r += xi;
        if (r > half)
          r -= xi;
        if (r != 0)
          digit.push_back({t.m, mpq_class(r)});
      }
      const QPoly dp = QPoly::from_terms(n, digit);
      rest = (rest - dp) * mpq_class(mpz_class(1), xi);
      for (auto t : dp.terms()) {
        t.m.e[v] = static_cast<std::uint8_t>(e);
        t.m.deg = static_cast<std::uint16_t>(t.m.deg + e);
        terms.push_back(std::move(t));
      }
    }
    QPoly g = QPoly::from_terms(n, std::move(terms));
    if (!g.is_zero()) {
      g *= mpq_class(1, 1) / mpq_class(integer_content(g));
      QPoly q;
      if (try_divide(a, g, q) && try_divide(b, g, q))
        return g * mpq_class(cg);
    }
    // the usual growth factor keeps successive xi free of common structure
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

QPoly content_in(const QPoly &p, int var) {
  const int n = p.nvars();
  QPoly g(n);
  for (const auto &c : p.coefficients_in(var)) {
    if (c.is_zero())
      continue;
    g = gcd(g, c);
    if (g.is_constant())
      return QPoly(n, mpq_class(1));
  }
  return g;
}

} // namespace

QPoly gcd(const QPoly &a, const QPoly &b) {
  const int n = std::max(a.nvars(), b.nvars());
  if (a.is_zero())
    return b.monic();
  if (b.is_zero())
    return a.monic();
  if (a.is_constant() || b.is_constant())
    return QPoly(n, mpq_class(1));
  if (a == b)
    return a.monic();
  if (auto h = heuristic_gcd(a.primitive_integer(), b.primitive_integer()))
    return h->monic();
  const int v = std::max(a.main_variable(), b.main_variable());
  if (!a.uses(v))
    return gcd(a, content_in(b, v));
  if (!b.uses(v))
    return gcd(content_in(a, v), b);

  const QPoly ca = content_in(a, v);
  const QPoly cb = content_in(b, v);
  const QPoly c = gcd(ca, cb);
  QPoly pa = (ca.is_constant() ? a : exact_divide(a, ca)).primitive_integer();
  QPoly pb = (cb.is_constant() ? b : exact_divide(b, cb)).primitive_integer();
  if (pa.degree_in(v) < pb.degree_in(v))
    std::swap(pa, pb);
  const int bound = gcd_degree_bound(pa, pb, v);
  if (bound == 0)
    return c.monic();
  if (bound == pb.degree_in(v)) {
    QPoly q;
    if (try_divide(pa, pb, q))
      return (c * pb).monic();
  }
  QPoly g(n);
  while (true) {
    QPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(v) == 0) {
      g = QPoly(n, mpq_class(1));
      break;
    }
    pa = std::move(pb);
    pb = primitive_part_in(r, v);
  }
  if (!g.is_constant())
    g = primitive_part_in(g, v);
  return (c * g).monic();
}

} // namespace logsplit::internal
