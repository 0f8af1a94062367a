#pragma once

#include "logsplit/ratfun.hpp"

#include <random>

namespace testing_support {

using namespace logsplit;

inline long uniform(std::mt19937_64 &rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline mpq_class small_rational(std::mt19937_64 &rng, long range = 5) {
  mpq_class q(uniform(rng, -range, range), uniform(rng, 1, range));
  q.canonicalize();
  return q;
}

inline UPoly small_upoly(std::mt19937_64 &rng, int max_deg) {
  std::vector<mpq_class> c;
  const int d = static_cast<int>(uniform(rng, 0, max_deg));
  for (int i = 0; i <= d; ++i)
    c.push_back(small_rational(rng));
  return UPoly(c);
}

/// A random element of F; over Q the t-degree is 0.
inline BaseElem small_base(std::mt19937_64 &rng, FieldConfig cfg) {
  if (!cfg.has_t())
    return BaseElem(small_rational(rng));
  UPoly den = small_upoly(rng, 2);
  if (den.is_zero())
    den = UPoly(1);
  return BaseElem(small_upoly(rng, 2), den);
}

inline MultiPoly random_poly(std::mt19937_64 &rng, int m, int max_deg, FieldConfig cfg, int terms = 4,
                             long coeff_range = 3) {
  MultiPoly p(m);
  for (int j = 0; j < terms; ++j) {
    Monomial mono(static_cast<std::size_t>(m), 0);
    int budget = static_cast<int>(uniform(rng, 0, max_deg));
    for (int i = 0; i < m && budget > 0; ++i) {
      const int e = static_cast<int>(uniform(rng, 0, budget));
      mono[static_cast<std::size_t>(i)] = e;
      budget -= e;
    }
    std::shuffle(mono.begin(), mono.end(), rng);
    const BaseElem c = cfg.has_t() && uniform(rng, 0, 2) == 0 ? small_base(rng, cfg)
                                                              : BaseElem(uniform(rng, -coeff_range, coeff_range));
    p.add_term(mono, c);
  }
  return p;
}

inline RatFun random_ratfun(std::mt19937_64 &rng, int m, FieldConfig cfg, int max_deg = 2) {
  MultiPoly den;
  do
    den = random_poly(rng, m, max_deg, cfg, 2);
  while (den.is_zero());
  return RatFun(random_poly(rng, m, max_deg, cfg, 3), den);
}

inline RatFun random_nonzero_ratfun(std::mt19937_64 &rng, int m, FieldConfig cfg, int max_deg = 2) {
  RatFun r;
  do
    r = random_ratfun(rng, m, cfg, max_deg);
  while (r.is_zero());
  return r;
}

inline RatFun x(int m, int i) { return RatFun::variable(m, i); }
inline RatFun c(int m, const BaseElem &v) { return RatFun::constant(m, v); }
inline RatFun t(int m) { return RatFun::constant(m, BaseElem::t()); }

} // namespace testing_support
