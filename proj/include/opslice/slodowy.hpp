#pragma once

#include "opslice/sl2.hpp"

namespace opslice {

struct not_even_error : error {
  using error::error;
};
struct wrong_weight_error : error {
  using error::error;
};
struct not_in_slice_error : error {
  using error::error;
};

// Centralizer decomposition of an even triple: V = c + sum_j V_{2m_j},
// V_2 = <e> + Vhat_2 (Killing-orthogonal to f).
struct SlodowyData {
  Sl2Triple triple;
  GradedDecomposition grading;
  SubspaceBasis c_basis;
  std::vector<int> exponents;  // m_1 < ... < m_N, m_1 = 1
  std::map<int, SubspaceBasis> hw_spaces;  // m_j -> V_{2 m_j}
  SubspaceBasis vhat2;
  SubspaceBasis e_line;
  int top_exponent() const { return exponents.empty() ? 0 : exponents.back(); }
};

struct ParabolicData {
  GradedDecomposition grading;
  SubspaceBasis p_basis;      // weights >= 0
  SubspaceBasis levi_basis;   // weight 0
  std::vector<SubspaceBasis> u_filtration;      // u^i = weights >= 2i, i = 1..m_N
  std::map<int, SubspaceBasis> neg_filtration;  // canonical filtration g^j = weights >= 2j
};

SubspaceBasis centralizer_of_e(const Sl2Triple& t, const LieAlgebra& g);

SlodowyData slodowy_data(const Sl2Triple& t, const LieAlgebra& g);
SlodowyData slodowy_data(const Sl2Triple& t, const LieAlgebra& g, GradedDecomposition grading);

ParabolicData parabolic_data(const Sl2Triple& t, const LieAlgebra& g);
ParabolicData parabolic_data(const Sl2Triple& t, const LieAlgebra& g, GradedDecomposition grading);

// Orbit of x in g_weight is open iff y -> [y, x] maps g_0 onto g_weight.
bool open_orbit_member(const QMatrix& x, const ParabolicData& pd, int weight, const LieAlgebra& g);

// The slice bijection U^1 x (f + V) -> f + V + g^0: forward map
// Ad(exp(sum x_{2k}))(f + v), and its exact inverse by the graded sweep.
// Templated over the scalar so the lambda = 0 connection normalization is
// literally the polynomial-coefficient instance.
template <class T>
struct LynchParts {
  std::map<int, Matrix<T>> x_parts;  // weight 2k -> component in g_{2k}
  Matrix<T> v;                       // element of V
};

// Splits g_d = V_d + ad_f(g_{d+2}) for every even d >= 0; precomputed once
// and shared by lynch_decompose and the connection normalization.
struct SliceSplitter {
  const LieAlgebra* g = nullptr;
  const SlodowyData* sd = nullptr;
  struct Level {
    int d;
    std::vector<QMatrix> v_vectors;        // basis of V_d
    std::vector<QMatrix> raise_vectors;    // basis of g_{d+2}
    QMatrix split_inverse;  // inverse of [flatten(V_d) | flatten(ad_f raise)] restricted to g_d coords
    SubspaceBasis gd;       // basis of g_d
  };
  std::vector<Level> levels;  // d = 0, 2, ..., 2 m_N
};

SliceSplitter make_slice_splitter(const LieAlgebra& g, const SlodowyData& sd);

LynchParts<Rational> lynch_decompose(const QMatrix& a, const SlodowyData& sd, const LieAlgebra& g);
LynchParts<Polynomial> lynch_decompose(const PMatrix& a, const SlodowyData& sd, const LieAlgebra& g);

QMatrix lynch_compose(const std::map<int, QMatrix>& x_parts, const QMatrix& v, const SlodowyData& sd);
PMatrix lynch_compose(const std::map<int, PMatrix>& x_parts, const PMatrix& v, const SlodowyData& sd);

}  // namespace opslice
