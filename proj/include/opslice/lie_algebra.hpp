#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opslice/json_io.hpp"
#include "opslice/linalg.hpp"

namespace opslice {

struct unsupported_family_error : error {
  using error::error;
};
struct not_in_algebra_error : error {
  using error::error;
};

enum class Family { sl, so, sp, custom };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// A classical complex semisimple Lie algebra realized by a basis of rational
// matrices. For so/sp the defining form J satisfies x^T J + J x = 0 on every
// basis element; J is antidiagonal by default so that the upper triangular
// matrices intersect the algebra in a Borel.
class LieAlgebra {
 public:
  Family family = Family::custom;
  int n = 0;  // matrix size
  std::vector<QMatrix> basis;
  std::optional<QMatrix> form;

  int dim() const { return static_cast<int>(basis.size()); }
  // n^2 x dim matrix whose columns are the flattened basis vectors.
  const QMatrix& basis_columns() const { return basis_columns_; }
  void finalize();  // builds basis_columns_; called by the constructors below

 private:
  QMatrix basis_columns_;
};

LieAlgebra construct_classical(Family family, int n);
// so-type algebra for an arbitrary symmetric invertible J.
LieAlgebra construct_orthogonal(int n, QMatrix j);
LieAlgebra construct_custom(std::vector<QMatrix> basis, std::optional<QMatrix> j = std::nullopt);

Json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j);

Vec flatten(const QMatrix& m);
QMatrix unflatten(const Vec& v, int rows, int cols);

template <class T>
Matrix<T> bracket(const Matrix<T>& x, const Matrix<T>& y) {
  return multiply(x, y) - multiply(y, x);
}

// Exact coordinates of x in the algebra basis; nullopt when x is outside.
std::optional<Vec> coordinates(const LieAlgebra& g, const QMatrix& x);
bool contains(const LieAlgebra& g, const QMatrix& x);

// Matrix of y -> [x, y] in the algebra basis. Throws when x is not in g.
QMatrix adjoint_operator(const QMatrix& x, const LieAlgebra& g);

// trace(ad_x ad_y), computed through the adjoint representation.
Rational killing_form(const QMatrix& x, const QMatrix& y, const LieAlgebra& g);

// x^T J + J x == 0, the so/sp membership condition.
bool preserves_form(const QMatrix& x, const QMatrix& j);
bool preserves_form(const PMatrix& x, const QMatrix& j);

// [B_i, B_j] in span(basis) for all pairs.
bool closed_under_bracket(const LieAlgebra& g);

struct SubspaceBasis {
  const LieAlgebra* ambient = nullptr;
  std::vector<QMatrix> vectors;
  int dim() const { return static_cast<int>(vectors.size()); }
  // flattened vectors as columns, n^2 x dim
  QMatrix flat;
};

SubspaceBasis make_subspace(const LieAlgebra& g, std::vector<QMatrix> vectors);
std::optional<Vec> coordinates(const SubspaceBasis& s, const QMatrix& x);
// Polynomial-valued coordinates for a polynomial matrix lying in span(s)[z].
std::optional<std::vector<Polynomial>> coordinates_poly(const SubspaceBasis& s, const PMatrix& x);
QMatrix combine(const SubspaceBasis& s, const Vec& coords);
PMatrix combine_poly(const SubspaceBasis& s, const std::vector<Polynomial>& coords);

}  // namespace opslice
