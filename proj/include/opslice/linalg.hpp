#pragma once

#include <optional>
#include <vector>

#include "opslice/matrix.hpp"

namespace opslice {

// Reduced row echelon form; pivots chosen as the first nonzero entry in the
// column, lowest row index first (ties never arise), for determinism.
struct RrefResult {
  QMatrix mat;
  std::vector<int> pivot_cols;  // one per pivot row
  int rank = 0;
};

// pivot_col_limit restricts pivot search to columns [0, limit); columns at or
// beyond the limit are carried along (augmented right-hand sides).
RrefResult rref(QMatrix a, int pivot_col_limit = -1);

// Basis of the right null space; empty when injective; zero matrix yields the
// standard basis. Vectors come out of the canonical free-column completion.
std::vector<Vec> kernel_basis(const QMatrix& m);

struct LinearSolution {
  Vec particular;
  std::vector<Vec> kernel;
};

// Exact solve M x = b. nullopt when b is not in the image. The particular
// solution is the elimination representative (free variables set to zero).
std::optional<LinearSolution> solve_linear(const QMatrix& m, const Vec& b);

// Multi right-hand-side solve: X with M X = B, particular representatives
// column by column. nullopt if any column is inconsistent.
std::optional<QMatrix> solve_many(const QMatrix& m, const QMatrix& b);

// Same with polynomial right-hand sides, solved degree by degree against one
// elimination of m.
std::optional<PMatrix> solve_many_poly(const QMatrix& m, const PMatrix& b);

int rank_of(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);

QMatrix columns_from(const std::vector<Vec>& cols);

}  // namespace opslice
