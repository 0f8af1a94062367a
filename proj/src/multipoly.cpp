#include "logsplit/multipoly.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace logsplit {

int total_degree(const Monomial &m) { return std::accumulate(m.begin(), m.end(), 0); }

bool GrlexGreater::operator()(const Monomial &a, const Monomial &b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db)
    return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i])
      return a[i] > b[i];
  return false;
}

MultiPoly::MultiPoly(int order, const BaseElem &c) : m_(order) {
  if (!c.is_zero())
    terms_.emplace(Monomial(static_cast<std::size_t>(order), 0), c);
}

MultiPoly MultiPoly::variable(int order, int i) {
  if (i < 0 || i >= order)
    throw std::invalid_argument("MultiPoly: variable index out of range");
  Monomial e(static_cast<std::size_t>(order), 0);
  e[i] = 1;
  return monomial(order, e, BaseElem(1));
}

MultiPoly MultiPoly::monomial(int order, const Monomial &mono, const BaseElem &c) {
  MultiPoly p(order);
  p.add_term(mono, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && logsplit::total_degree(terms_.begin()->first) == 0);
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : logsplit::total_degree(terms_.begin()->first);
}

int MultiPoly::degree_in(int i) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto &[mono, c] : terms_)
    d = std::max(d, mono[i]);
  return d;
}

BaseElem MultiPoly::coeff(const Monomial &mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? BaseElem() : it->second;
}

void MultiPoly::add_term(const Monomial &mono, const BaseElem &c) {
  if (static_cast<int>(mono.size()) != m_)
    throw std::invalid_argument("MultiPoly: monomial length does not match order");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto &[mono, c] : r.terms_)
    c = -c;
  return r;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
  if (o.m_ != m_ && !o.is_zero())
    throw std::invalid_argument("MultiPoly: order mismatch");
  for (const auto &[mono, c] : o.terms_)
    add_term(mono, c);
  return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) {
  if (o.m_ != m_ && !o.is_zero())
    throw std::invalid_argument("MultiPoly: order mismatch");
  for (const auto &[mono, c] : o.terms_)
    add_term(mono, -c);
  return *this;
}

MultiPoly &MultiPoly::operator*=(const BaseElem &s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[mono, c] : terms_)
    c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
  if (a.m_ != b.m_)
    throw std::invalid_argument("MultiPoly: order mismatch");
  MultiPoly r(a.m_);
  Monomial e(static_cast<std::size_t>(a.m_));
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) {
      for (int i = 0; i < a.m_; ++i)
        e[i] = ma[i] + mb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(m_, BaseElem(1));
  MultiPoly base = *this;
  while (k) {
    if (k & 1u)
      result = result * base;
    k >>= 1u;
    if (k)
      base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero() || lead_coeff().is_one())
    return *this;
  return *this * lead_coeff().inverse();
}

MultiPoly MultiPoly::partial(int i) const {
  if (i < 0 || i >= m_)
    throw std::invalid_argument("partial: index out of range");
  MultiPoly r(m_);
  for (const auto &[mono, c] : terms_) {
    if (mono[i] == 0)
      continue;
    Monomial e = mono;
    e[i] -= 1;
    r.add_term(e, c * BaseElem(mono[i]));
  }
  return r;
}

MultiPoly MultiPoly::delta_coeffs(FieldConfig cfg) const {
  MultiPoly r(m_);
  if (!cfg.has_t())
    return r;
  for (const auto &[mono, c] : terms_)
    r.add_term(mono, delta_base(c, cfg));
  return r;
}

MultiPoly MultiPoly::exact_div(const MultiPoly &d) const {
  if (d.is_zero())
    throw std::invalid_argument("MultiPoly: division by zero");
  MultiPoly r = *this;
  MultiPoly q(m_);
  const Monomial &ld = d.lead_monomial();
  const BaseElem inv = d.lead_coeff().inverse();
  while (!r.is_zero()) {
    const Monomial lr = r.lead_monomial();
    Monomial e(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      e[i] = lr[i] - ld[i];
      if (e[i] < 0)
        throw std::logic_error("MultiPoly: inexact division");
    }
    const BaseElem c = r.lead_coeff() * inv;
    MultiPoly t = monomial(m_, e, c);
    q += t;
    r -= t * d;
  }
  return q;
}

bool MultiPoly::divides(const MultiPoly &a) const {
  try {
    (void)a.exact_div(*this);
    return true;
  } catch (const std::logic_error &) {
    return false;
  }
}

bool MultiPoly::involves_t() const {
  for (const auto &[mono, c] : terms_)
    if (!c.is_rational())
      return true;
  return false;
}

namespace {

std::string monomial_string(const Monomial &mono) {
  std::string s;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] == 0)
      continue;
    if (!s.empty())
      s += "*";
    s += "x" + std::to_string(i);
    if (mono[i] > 1)
      s += "^" + std::to_string(mono[i]);
  }
  return s;
}

} // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[mono, c] : terms_) {
    out += format_term(c, monomial_string(mono), first);
    first = false;
  }
  return out;
}

} // namespace logsplit
