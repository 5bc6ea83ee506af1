#pragma once

#include <map>

#include "opslice/lie_algebra.hpp"

namespace opslice {

struct zero_element_error : error {
  using error::error;
};
struct non_integral_weights_error : error {
  using error::error;
};
struct bad_partition_error : error {
  using error::error;
};

struct Sl2Triple {
  QMatrix f, h, e;
};

Json triple_to_json(const Sl2Triple& t);
Sl2Triple triple_from_json(const Json& j);

// [h,e] = 2e, [h,f] = -2f, [e,f] = h, exactly.
bool validate_triple(const Sl2Triple& t);

// Jacobson-Morozov completion of a nonzero nilpotent e. Deterministic: both
// steps take the elimination particular solution.
Sl2Triple jm_complete(const QMatrix& e, const LieAlgebra& g);

// Integer ad_h weight-space decomposition of g.
class GradedDecomposition {
 public:
  std::vector<int> weights;  // sorted, distinct
  std::map<int, SubspaceBasis> spaces;

  const SubspaceBasis* space(int w) const {
    auto it = spaces.find(w);
    return it == spaces.end() ? nullptr : &it->second;
  }
  int dim_at(int w) const {
    const SubspaceBasis* s = space(w);
    return s ? s->dim() : 0;
  }
  int top_weight() const { return weights.empty() ? 0 : weights.back(); }

  // Exact weight components of an algebra element.
  std::map<int, QMatrix> decompose(const LieAlgebra& g, const QMatrix& x) const;
  std::map<int, PMatrix> decompose_poly(const LieAlgebra& g, const PMatrix& x) const;

  // Built by ad_h_grading.
  QMatrix cob_inverse;              // graded coords from algebra coords
  std::vector<int> column_weight;   // weight of each graded coordinate
};

GradedDecomposition ad_h_grading(const Sl2Triple& t, const LieAlgebra& g);

bool is_even(const Sl2Triple& t, const LieAlgebra& g);
bool is_even(const GradedDecomposition& gr);

struct ModuleMultiplicities {
  // top ad_h weight of an irreducible summand -> multiplicity; key 0 always
  // present with the centralizer dimension.
  std::map<int, int> entries;
  int at(int w) const {
    auto it = entries.find(w);
    return it == entries.end() ? 0 : it->second;
  }
};

ModuleMultiplicities module_multiplicities(const Sl2Triple& t, const LieAlgebra& g);
ModuleMultiplicities module_multiplicities(const Sl2Triple& t, const LieAlgebra& g,
                                           const GradedDecomposition& gr);

// Principal triple. sl_n comes out in closed form: f the subdiagonal of ones,
// h = diag(n-1, n-3, ..., 1-n), e the superdiagonal with entries i(n-i).
Sl2Triple principal_triple(const LieAlgebra& g);

// Given a diagonal grading element h in g with even spectrum, picks a generic
// weight-2 element and solves the triple relations for f. Used for the so/sp
// principal triples and the explicit model families.
Sl2Triple complete_even_triple_from_h(const LieAlgebra& g, const QMatrix& h);

// Block-diagonal Jordan representative for a partition of n (sl_n only).
QMatrix partition_nilpotent(const std::vector<int>& partition, const LieAlgebra& g);

std::vector<std::vector<int>> partitions_of(int n);

}  // namespace opslice
