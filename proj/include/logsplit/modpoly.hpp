#pragma once

// Sparse polynomials over a word-size prime field, used to explore the
// solution set of a polynomial system without rational coefficient growth.

#include "logsplit/qpoly.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace logsplit::internal {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);

struct ModTerm {
  Mono m;
  u64 c;
};

class ModPoly {
public:
  ModPoly() = default;
  ModPoly(int nvars, u64 p) : n_(nvars), p_(p) {}
  /// Sets ok = false when a coefficient denominator vanishes mod p.
  static ModPoly reduce(const QPoly &q, u64 p, bool &ok);
  static ModPoly from_terms(int nvars, u64 p, std::vector<ModTerm> terms);

  int nvars() const { return n_; }
  u64 prime() const { return p_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.deg == 0); }
  const std::vector<ModTerm> &terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  const ModTerm &lead() const { return t_.front(); }
  int total_degree() const { return t_.empty() ? -1 : t_.front().m.deg; }

  ModPoly monic() const;
  ModPoly mul_term(u64 c, const Mono &m) const;
  /// this - c * m * o
  void sub_mul_term(u64 c, const Mono &m, const ModPoly &o);
  void drop_lead();
  ModPoly evaluate(int var, u64 v) const;

private:
  int n_ = 0;
  u64 p_ = 0;
  std::vector<ModTerm> t_;
};

/// Aborts when max_pairs S-pairs or max_work term operations are exceeded.
std::vector<ModPoly> groebner_mod(std::vector<ModPoly> polys, std::size_t max_pairs, bool &aborted,
                                  std::size_t max_work = SIZE_MAX);
ModPoly normal_form_mod(const ModPoly &f, const std::vector<ModPoly> &basis);

/// Distinct roots in F_p of a dense univariate polynomial (low degree first).
std::vector<u64> roots_mod(std::vector<u64> f, u64 p);

} // namespace logsplit::internal
