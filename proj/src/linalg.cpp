#include "logsplit/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace logsplit::internal {

std::vector<int> rref(QMatrix &m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0)
      continue;
    if (p != r)
      for (int j = c; j < m.cols; ++j)
        std::swap(m.at(p, j), m.at(r, j));
    const mpq_class inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols; ++j)
      m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0)
        continue;
      const mpq_class s = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        if (m.at(r, j) != 0)
          m.at(i, j) -= s * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<mpq_class>> kernel_basis(const QMatrix &m0) {
  QMatrix m = m0;
  const std::vector<int> pivots = rref(m);
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols), 0);
  for (int c : pivots)
    is_pivot[c] = 1;
  std::vector<std::vector<mpq_class>> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<mpq_class> v(static_cast<std::size_t>(m.cols));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.at(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve_particular(const QMatrix &m0, const std::vector<mpq_class> &rhs,
                      std::vector<mpq_class> &x) {
  QMatrix m(m0.rows, m0.cols + 1);
  for (int i = 0; i < m0.rows; ++i) {
    for (int j = 0; j < m0.cols; ++j)
      m.at(i, j) = m0.at(i, j);
    m.at(i, m0.cols) = rhs[i];
  }
  const std::vector<int> pivots = rref(m);
  if (!pivots.empty() && pivots.back() == m0.cols)
    return false;
  x.assign(static_cast<std::size_t>(m0.cols), mpq_class(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = m.at(static_cast<int>(r), m0.cols);
  return true;
}

QMatrix PolyMatrix::evaluate(const mpq_class &e) const {
  QMatrix q(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    q.a[i] = a[i].eval(e);
  return q;
}

BareissResult bareiss_rank(PolyMatrix m) {
  BareissResult res;
  UPoly prev(1);
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    // lowest-degree pivot keeps intermediate degrees small
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).is_zero() && (p < 0 || m.at(i, c).degree() < m.at(p, c).degree()))
        p = i;
    if (p < 0)
      continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j)
        std::swap(m.at(p, j), m.at(r, j));
    const UPoly piv = m.at(r, c);
    for (int i = r + 1; i < m.rows; ++i) {
      const UPoly lead = m.at(i, c);
      for (int j = c + 1; j < m.cols; ++j) {
        UPoly v = piv * m.at(i, j);
        if (!lead.is_zero() && !m.at(r, j).is_zero())
          v -= lead * m.at(r, j);
        m.at(i, j) = prev.degree() == 0 ? v * mpq_class(1 / prev.lead()) : v.exact_div(prev);
      }
      m.at(i, c) = UPoly();
    }
    prev = piv;
    ++r;
  }
  res.rank = r;
  res.minor = r == 0 ? UPoly(1) : prev;
  return res;
}

} // namespace logsplit::internal
