#pragma once

#include "logsplit/upoly.hpp"

#include <gmpxx.h>

#include <vector>

namespace logsplit::internal {

/// Dense row-major matrix over Q.
struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpq_class> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  mpq_class &at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const mpq_class &at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

/// In-place reduced row echelon form; returns pivot columns in order.
std::vector<int> rref(QMatrix &m);

/// Basis of the right kernel. Vector j has a 1 at the j-th free column
/// (free columns ascending) and zeros at the other free columns.
std::vector<std::vector<mpq_class>> kernel_basis(const QMatrix &m);

/// Solves m * x = rhs with free variables set to zero; false if inconsistent.
bool solve_particular(const QMatrix &m, const std::vector<mpq_class> &rhs,
                      std::vector<mpq_class> &x);

/// Dense row-major matrix over Q[e].
struct PolyMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<UPoly> a;

  PolyMatrix() = default;
  PolyMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  UPoly &at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const UPoly &at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  QMatrix evaluate(const mpq_class &e) const;
};

struct BareissResult {
  int rank = 0;
  /// Determinant of a nonsingular rank x rank submatrix (the last pivot);
  /// every point where the rank drops is one of its roots.
  UPoly minor;
};

/// Fraction-free elimination over Q[e].
BareissResult bareiss_rank(PolyMatrix m);

} // namespace logsplit::internal
