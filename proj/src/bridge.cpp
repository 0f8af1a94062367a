#include "logsplit/bridge.hpp"

#include <stdexcept>

namespace logsplit::internal {

UPoly t_denominator_lcm(const MultiPoly &p) {
  UPoly l(1);
  for (const auto &[mono, c] : p.terms())
    if (c.den().degree() > 0)
      l = lcm(l, c.den());
  return l;
}

MultiPoly clear_t_denominators(const MultiPoly &p) {
  const UPoly l = t_denominator_lcm(p);
  if (l.degree() == 0)
    return p;
  return p * BaseElem(l);
}

QPoly to_qpoly(const MultiPoly &p, bool with_t) {
  const int m = p.order();
  const int n = m + (with_t ? 1 : 0);
  std::vector<Term> terms;
  for (const auto &[mono, c] : p.terms()) {
    if (!c.is_polynomial())
      throw std::logic_error("to_qpoly: coefficient is not a t-polynomial");
    if (!with_t && c.num().degree() > 0)
      throw std::logic_error("to_qpoly: unexpected t");
    const mpq_class scale = 1 / c.den().lead();
    Mono base;
    for (int i = 0; i < m; ++i) {
      base.e[i] = static_cast<std::uint8_t>(mono[i]);
      base.deg = static_cast<std::uint16_t>(base.deg + mono[i]);
    }
    const auto &cs = c.num().coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (cs[j] == 0)
        continue;
      Mono mm = base;
      if (j > 0) {
        mm.e[m] = static_cast<std::uint8_t>(j);
        mm.deg = static_cast<std::uint16_t>(mm.deg + j);
      }
      terms.push_back({mm, cs[j] * scale});
    }
  }
  return QPoly::from_terms(n, std::move(terms));
}

MultiPoly from_qpoly(const QPoly &q, int m, bool with_t) {
  MultiPoly p(m);
  Monomial mono(static_cast<std::size_t>(m));
  for (const auto &term : q.terms()) {
    for (int i = 0; i < m; ++i)
      mono[i] = term.m.e[i];
    const int tdeg = with_t ? term.m.e[m] : 0;
    p.add_term(mono, BaseElem(UPoly::monomial(term.c, tdeg)));
  }
  return p;
}

} // namespace logsplit::internal
