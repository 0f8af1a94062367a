#pragma once

#include "logsplit/qpoly.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace logsplit::internal {

/// Reduced Groebner basis under grevlex (monic, sorted by leading monomial).
/// Sets `aborted` and returns a partial basis when max_pairs S-pairs or
/// max_work term operations are exceeded.
std::vector<QPoly> groebner(std::vector<QPoly> polys, std::size_t max_pairs, bool &aborted,
                            std::size_t max_work = SIZE_MAX);

/// Normal form of p modulo a Groebner basis.
QPoly normal_form(const QPoly &p, const std::vector<QPoly> &basis);

struct SolveOptions {
  std::size_t max_branches = 10000;
  std::size_t max_gb_pairs = 200000;
  /// Term operations allowed per Groebner computation.
  std::size_t max_gb_work = SIZE_MAX;
};

struct SolveResult {
  std::vector<std::vector<mpq_class>> solutions;
  /// The branch budget ran out; some solutions may be missing.
  bool cap_hit = false;
  /// Some component had positive dimension and was only sampled.
  bool positive_dim = false;
  /// Some coordinate was a root of an irreducible factor of degree >= 2.
  bool irrational = false;
  /// A Groebner computation was aborted.
  bool gb_aborted = false;
  /// A multiple point could not be lifted from its modular image.
  bool singular = false;
  std::size_t branches = 0;
  std::size_t gb_calls = 0;
};

struct ModularPoints {
  enum Status { Ok, PositiveDim, Failed } status = Failed;
  /// Variables occurring in the system; points list their values in this order.
  std::vector<int> vars;
  std::vector<std::vector<mpq_class>> points;
  /// Set when the system has positive dimension modulo the prime.
  int free_var = -1;
  bool irrational = false;
  /// Some point had a singular Jacobian and could not be lifted.
  bool singular = false;
};

/// Rational points of a system by enumeration modulo a large prime, Hensel
/// lifting and rational reconstruction; each point is checked exactly.
ModularPoints modular_points(const std::vector<QPoly> &eqs, int n, std::size_t max_pairs,
                            std::size_t max_work = SIZE_MAX);

/// All rational points of the variety of eqs (sampled on positive-dimensional
/// components), by linear elimination, monomial splitting, rational roots of
/// univariate and minimal polynomials, and Groebner bases.
SolveResult solve_rational(const std::vector<QPoly> &eqs, int nvars,
                           const SolveOptions &opts = {});

} // namespace logsplit::internal
