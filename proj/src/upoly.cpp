#include "logsplit/upoly.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace logsplit {

UPoly::UPoly(const mpq_class &c) {
  if (c != 0) {
    c_.push_back(c);
    c_.back().canonicalize();
  }
}

UPoly::UPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto &q : c_)
    q.canonicalize();
  trim();
}

UPoly UPoly::monomial(const mpq_class &c, int degree) {
  UPoly p;
  if (c == 0)
    return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, mpq_class(0));
  p.c_.back() = c;
  p.c_.back().canonicalize();
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

mpq_class UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size()))
    return 0;
  return c_[i];
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto &q : r.c_)
    q = -q;
  return r;
}

UPoly &UPoly::operator+=(const UPoly &o) {
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly &UPoly::operator-=(const UPoly &o) {
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly &UPoly::operator*=(const UPoly &o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UPoly &UPoly::operator*=(const mpq_class &s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto &q : c_)
    q *= s;
  return *this;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly &d) const {
  if (d.is_zero())
    throw std::invalid_argument("UPoly: division by zero polynomial");
  UPoly r = *this;
  if (r.degree() < d.degree())
    return {UPoly(), r};
  std::vector<mpq_class> q(r.c_.size() - d.c_.size() + 1, mpq_class(0));
  const mpq_class inv = 1 / d.lead();
  const int dd = d.degree();
  for (int k = r.degree(); k >= dd; --k) {
    mpq_class f = r.c_[k] * inv;
    if (f == 0)
      continue;
    q[k - dd] = f;
    for (int j = 0; j <= dd; ++j)
      r.c_[k - dd + j] -= f * d.c_[j];
  }
  r.trim();
  return {UPoly(std::move(q)), r};
}

UPoly UPoly::exact_div(const UPoly &d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero())
    throw std::logic_error("UPoly: inexact division");
  return q;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1)
    return {};
  std::vector<mpq_class> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero())
    return *this;
  UPoly r = *this;
  r *= mpq_class(1 / lead());
  return r;
}

mpq_class UPoly::eval(const mpq_class &x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

UPoly UPoly::pow(unsigned n) const {
  UPoly result(1);
  UPoly base = *this;
  while (n) {
    if (n & 1u)
      result *= base;
    n >>= 1u;
    if (n)
      base *= base;
  }
  return result;
}

UPoly UPoly::shift(const mpq_class &s) const {
  // Horner in the shifted variable.
  UPoly acc;
  const UPoly lin(std::vector<mpq_class>{s, mpq_class(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= lin;
    acc += UPoly(*it);
  }
  return acc;
}

std::string UPoly::to_string(const std::string &var) const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class &q = c_[i];
    if (q == 0)
      continue;
    mpq_class a = abs(q);
    if (first) {
      if (q < 0)
        os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1)
      os << a.get_str() << "*";
    os << var;
    if (i > 1)
      os << "^" << i;
  }
  return os.str();
}

namespace {

// Integer multiple of p with coprime integer coefficients.
std::vector<mpz_class> primitive_integer(const UPoly &p) {
  mpz_class l = 1;
  for (const auto &c : p.coeffs())
    l = lcm(l, mpz_class(c.get_den()));
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto &c : p.coeffs()) {
    z.push_back(mpz_class(c * l));
    g = gcd(g, z.back());
  }
  for (auto &v : z)
    v /= g;
  return z;
}

mpz_class horner(const std::vector<mpz_class> &p, const mpz_class &x) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

// Heuristic gcd: integer gcd of values at a large xi, read back through
// balanced xi-adic digits and accepted only if it divides both inputs.
std::optional<UPoly> heuristic_gcd(const UPoly &a, const UPoly &b) {
  const auto za = primitive_integer(a), zb = primitive_integer(b);
  mpz_class ha = 0, hb = 0;
  for (const auto &v : za)
    ha = std::max(ha, mpz_class(abs(v)));
  for (const auto &v : zb)
    hb = std::max(hb, mpz_class(abs(v)));
  mpz_class xi = 2 * std::min(ha, hb) + 29;
  const std::size_t d = static_cast<std::size_t>(std::max(a.degree(), b.degree()));
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * (d + 1) > 40000)
      return std::nullopt;
    mpz_class g = gcd(horner(za, xi), horner(zb, xi));
    std::vector<mpq_class> digits;
    const mpz_class half = xi / 2;
    while (g != 0) {
      mpz_class r = g % xi;
      if (r < 0)
        r += xi;
      if (r > half)
        r -= xi;
      digits.emplace_back(r);
      g = (g - r) / xi;
    }
    const UPoly cand(std::move(digits));
    if (cand.degree() >= 0 && cand.degree() <= std::min(a.degree(), b.degree()) &&
        a.divmod(cand).second.is_zero() && b.divmod(cand).second.is_zero())
      return cand.monic();
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

} // namespace

UPoly gcd(const UPoly &a, const UPoly &b) {
  if (a.degree() > 2 && b.degree() > 2)
    if (auto g = heuristic_gcd(a, b))
      return *g;
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly lcm(const UPoly &a, const UPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  return (a * b).exact_div(gcd(a, b)).monic();
}

UPoly squarefree_part(const UPoly &a) {
  if (a.degree() <= 0)
    return a;
  return a.exact_div(gcd(a, a.derivative()));
}

} // namespace logsplit
