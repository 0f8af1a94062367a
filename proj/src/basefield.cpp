#include "logsplit/basefield.hpp"

#include <stdexcept>

namespace logsplit {

BaseElem::BaseElem(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::invalid_argument("BaseElem: zero denominator");
  canonicalize();
}

void BaseElem::canonicalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  if (den_.degree() > 0 && num_.degree() >= 0) {
    UPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  if (den_.lead() != 1) {
    mpq_class s = 1 / den_.lead();
    num_ *= s;
    den_ *= s;
  }
}

BaseElem BaseElem::operator-() const {
  BaseElem r = *this;
  r.num_ = -r.num_;
  return r;
}

BaseElem &BaseElem::operator+=(const BaseElem &o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0)
      canonicalize();
    else if (num_.is_zero())
      den_ = UPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

BaseElem &BaseElem::operator-=(const BaseElem &o) { return *this += -o; }

BaseElem &BaseElem::operator*=(const BaseElem &o) {
  num_ *= o.num_;
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return *this;
  }
  if (den_.degree() == 0 && o.den_.degree() == 0)
    return *this;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

BaseElem BaseElem::inverse() const {
  if (is_zero())
    throw std::invalid_argument("BaseElem: division by zero");
  return BaseElem(den_, num_);
}

BaseElem &BaseElem::operator/=(const BaseElem &o) { return *this *= o.inverse(); }

BaseElem BaseElem::pow(int n) const {
  if (n < 0)
    return inverse().pow(-n);
  return BaseElem(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}


std::string BaseElem::to_string() const { return is_zero() ? "0" : format_term(*this, "", true); }

std::string format_term(const BaseElem &c, const std::string &ms, bool leading) {
  const UPoly &n = c.num();
  int nonzero = 0, k = 0;
  for (int i = 0; i <= n.degree(); ++i)
    if (n.coeff(i) != 0) {
      ++nonzero;
      k = i;
    }
  bool negative = false;
  std::string body;
  if (nonzero == 1) {
    mpq_class a = n.coeff(k);
    negative = a < 0;
    a = abs(a);
    std::vector<std::string> parts;
    if (a != 1)
      parts.push_back(a.get_str());
    if (k > 0)
      parts.push_back(k == 1 ? "t" : "t^" + std::to_string(k));
    if (!ms.empty())
      parts.push_back(ms);
    for (std::size_t i = 0; i < parts.size(); ++i)
      body += (i ? "*" : "") + parts[i];
    if (body.empty())
      body = "1";
  } else {
    body = "(" + n.to_string("t") + ")";
    if (!ms.empty())
      body += "*" + ms;
  }
  const UPoly &d = c.den();
  if (d.degree() > 0) {
    int dterms = 0;
    for (const auto &q : d.coeffs())
      dterms += q != 0;
    body += dterms == 1 ? "/" + d.to_string("t") : "/(" + d.to_string("t") + ")";
  }
  if (leading)
    return (negative ? "-" : "") + body;
  return (negative ? " - " : " + ") + body;
}

BaseElem be_add(const BaseElem &a, const BaseElem &b) { return a + b; }
BaseElem be_mul(const BaseElem &a, const BaseElem &b) { return a * b; }
BaseElem be_neg(const BaseElem &a) { return -a; }
BaseElem be_inv(const BaseElem &a) { return a.inverse(); }

BaseElem delta_base(const BaseElem &a, FieldConfig cfg) {
  if (!cfg.has_t() || a.t_degree() <= 0)
    return BaseElem();
  const UPoly &n = a.num();
  const UPoly &d = a.den();
  if (d.degree() == 0)
    return BaseElem(n.derivative() * mpq_class(1 / d.lead()));
  return BaseElem(n.derivative() * d - n * d.derivative(), d * d);
}

} // namespace logsplit
