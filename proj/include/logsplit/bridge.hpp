#pragma once

// Conversions between the public F[x] representation and the internal
// Q[x, t] engine, where t (when present) is variable index m.

#include "logsplit/multipoly.hpp"
#include "logsplit/qpoly.hpp"

namespace logsplit::internal {

/// Monic lcm of the t-denominators of all coefficients.
UPoly t_denominator_lcm(const MultiPoly &p);

/// Multiplies p by t_denominator_lcm(p) so every coefficient is a t-polynomial.
MultiPoly clear_t_denominators(const MultiPoly &p);

/// Requires polynomial coefficients in t; t-dependence requires with_t.
QPoly to_qpoly(const MultiPoly &p, bool with_t);
MultiPoly from_qpoly(const QPoly &q, int m, bool with_t);

} // namespace logsplit::internal
