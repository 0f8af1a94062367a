#pragma once

#include "logsplit/upoly.hpp"

#include <vector>

namespace logsplit {

/// All distinct rational roots of a nonzero polynomial, in increasing order.
///
/// The square-free part is made monic over the integers and its integer roots
/// are located modulo a prime where it stays square-free, then lifted with
/// Newton iteration past the Cauchy bound and checked exactly. No root is
/// ever guessed: every returned value satisfies p(r) == 0.
std::vector<mpq_class> rational_roots(const UPoly &p);

/// True when p has an irreducible factor of degree >= 2 over Q, i.e. p has
/// roots that are not rational.
bool has_irrational_roots(const UPoly &p);

} // namespace logsplit
