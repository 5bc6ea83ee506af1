#include "opslice/linalg.hpp"

#include <algorithm>

namespace opslice {

RrefResult rref(QMatrix a, int pivot_col_limit) {
  const int rows = a.rows(), cols = a.cols();
  const int limit = pivot_col_limit < 0 ? cols : pivot_col_limit;
  RrefResult res;
  int r = 0;
  for (int c = 0; c < limit && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    const Rational inv = Rational(1) / a.at(r, c);
    for (int j = c; j < cols; ++j) a.at(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      const Rational f = a.at(i, c);
      for (int j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  res.mat = std::move(a);
  return res;
}

std::vector<Vec> kernel_basis(const QMatrix& m) {
  const int cols = m.cols();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, Rational(0));
    v[f] = 1;
    for (int k = 0; k < rr.rank; ++k) v[rr.pivot_cols[k]] = -rr.mat.at(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve_linear(const QMatrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw error("solve_linear shape mismatch");
  QMatrix bb(m.rows(), 1);
  for (int i = 0; i < m.rows(); ++i) bb.at(i, 0) = b[i];
  auto x = solve_many(m, bb);
  if (!x) return std::nullopt;
  LinearSolution sol;
  sol.particular.resize(m.cols());
  for (int i = 0; i < m.cols(); ++i) sol.particular[i] = x->at(i, 0);
  sol.kernel = kernel_basis(m);
  return sol;
}

std::optional<QMatrix> solve_many(const QMatrix& m, const QMatrix& b) {
  if (b.rows() != m.rows()) throw error("solve_many shape mismatch");
  const int n = m.cols(), k = b.cols();
  QMatrix aug(m.rows(), n + k);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    for (int j = 0; j < k; ++j) aug.at(i, n + j) = b.at(i, j);
  }
  RrefResult rr = rref(std::move(aug), n);
  // Inconsistent iff a non-pivot row still carries a nonzero RHS entry.
  for (int i = rr.rank; i < m.rows(); ++i)
    for (int j = 0; j < k; ++j)
      if (rr.mat.at(i, n + j) != 0) return std::nullopt;
  QMatrix x(n, k);
  for (int p = 0; p < rr.rank; ++p)
    for (int j = 0; j < k; ++j) x.at(rr.pivot_cols[p], j) = rr.mat.at(p, n + j);
  return x;
}

std::optional<PMatrix> solve_many_poly(const QMatrix& m, const PMatrix& b) {
  if (b.rows() != m.rows()) throw error("solve_many_poly shape mismatch");
  const int deg = max_z_degree(b);
  const int k = b.cols();
  if (deg < 0) return PMatrix(m.cols(), k);
  QMatrix wide(m.rows(), k * (deg + 1));
  for (int d = 0; d <= deg; ++d)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < k; ++j) wide.at(i, d * k + j) = b.at(i, j).coeff(d);
  auto x = solve_many(m, wide);
  if (!x) return std::nullopt;
  PMatrix out(m.cols(), k);
  for (int i = 0; i < m.cols(); ++i)
    for (int j = 0; j < k; ++j) {
      Vec cs(deg + 1);
      for (int d = 0; d <= deg; ++d) cs[d] = x->at(i, d * k + j);
      out.at(i, j) = Polynomial(std::move(cs));
    }
  return out;
}

int rank_of(const QMatrix& m) { return rref(m).rank; }

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (!m.is_square()) throw error("inverse needs a square matrix");
  const int n = m.rows();
  // Singular m leaves some identity column outside the image, so solve_many
  // already reports nullopt in that case.
  return solve_many(m, QMatrix::identity(n));
}

QMatrix columns_from(const std::vector<Vec>& cols) {
  if (cols.empty()) return QMatrix(0, 0);
  QMatrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < cols[j].size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = cols[j][i];
  return m;
}

}  // namespace opslice
