#include "opslice/minors.hpp"

#include <atomic>
#include <vector>

namespace opslice {

namespace {

// All r-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > n) return out;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

PMatrix submatrix(const PMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  PMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) s.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
  return s;
}

bool is_unit(const Polynomial& p) { return p.degree() == 0; }

}  // namespace

Polynomial poly_det(const PMatrix& m) {
  if (!m.is_square()) throw error("poly_det needs a square matrix");
  const int n = m.rows();
  if (n == 0) return Polynomial(1);
  PMatrix a = m;
  Polynomial prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a.at(i, k).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return Polynomial();
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Polynomial num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = Polynomial::div_exact(num, prev);
      }
      a.at(i, k) = Polynomial();
    }
    prev = a.at(k, k);
  }
  Polynomial d = a.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

Polynomial poly_matrix_minor_gcd_serial(const PMatrix& m, int r) {
  if (r < 0 || r > std::min(m.rows(), m.cols())) throw error("minor order out of range");
  if (r == 0) return Polynomial(1);
  auto row_sets = subsets(m.rows(), r);
  auto col_sets = subsets(m.cols(), r);
  Polynomial g;
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      g = Polynomial::monic_gcd(g, poly_det(submatrix(m, rs, cs)));
      if (is_unit(g)) return g;
    }
  }
  return g;
}

Polynomial poly_matrix_minor_gcd(const PMatrix& m, int r) {
  if (r < 0 || r > std::min(m.rows(), m.cols())) throw error("minor order out of range");
  if (r == 0) return Polynomial(1);
  auto row_sets = subsets(m.rows(), r);
  auto col_sets = subsets(m.cols(), r);
  const long total = static_cast<long>(row_sets.size()) * static_cast<long>(col_sets.size());
  if (total < 64) return poly_matrix_minor_gcd_serial(m, r);

  std::atomic<bool> done{false};
  Polynomial g;
#pragma omp parallel
  {
    Polynomial local;
#pragma omp for schedule(dynamic, 8) nowait
    for (long t = 0; t < total; ++t) {
      if (done.load(std::memory_order_relaxed)) continue;
      const auto& rs = row_sets[t / col_sets.size()];
      const auto& cs = col_sets[t % col_sets.size()];
      local = Polynomial::monic_gcd(local, poly_det(submatrix(m, rs, cs)));
      if (is_unit(local)) done.store(true, std::memory_order_relaxed);
    }
#pragma omp critical
    g = Polynomial::monic_gcd(g, local);
  }
  return g;
}

}  // namespace opslice
