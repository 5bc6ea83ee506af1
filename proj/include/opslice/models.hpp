#pragma once

#include <memory>

#include "opslice/connection.hpp"

namespace opslice {

struct shape_mismatch_error : error {
  using error::error;
};
struct symmetry_violation_error : error {
  using error::error;
};
struct not_principal_error : error {
  using error::error;
};
struct lambda_nonzero_error : error {
  using error::error;
};

enum class ModelFamily { sln_borel, tube_sl, tube_sp, tube_so4n, tube_so_line, so_partial_flag };

std::string model_family_name(ModelFamily f);
ModelFamily model_family_from_name(const std::string& s);

// Parameter conventions: sln_borel(n) lives in sl_n; tube_sl(n) in sl_{2n};
// tube_sp(n) in sp_{2n}; tube_so4n(n) in so_{4n}; tube_so_line(n) in so_n;
// so_partial_flag(n, k) in so_n (n odd for k >= 2).
struct ModelDescriptor {
  ModelFamily family = ModelFamily::sln_borel;
  int n = 0;
  int k = 0;
};

LieAlgebra model_algebra(const ModelDescriptor& d);
Sl2Triple model_triple(const ModelDescriptor& d, const LieAlgebra& g);

// Multiplicity data from the closed-form dimension count for each family,
// stored as literals, never recomputed through the code under test.
ModuleMultiplicities expected_multiplicities(const ModelDescriptor& d);
int expected_centralizer_dim(const ModelDescriptor& d);

// Owns the algebra so the subspace back-references stay valid across copies.
struct ModelContext {
  ModelDescriptor desc;
  std::shared_ptr<LieAlgebra> algebra;
  Sl2Triple triple;
  SlodowyData sd;
  ParabolicData pd;
};

ModelContext make_model_context(const ModelDescriptor& d);

// Context over an arbitrary even triple (desc left defaulted).
ModelContext make_context(std::shared_ptr<LieAlgebra> algebra, const Sl2Triple& t);

// Borel family: q on <e>, psis[j] the coefficient at exponent j (j = 2..n-1),
// placed on the V_{2j} basis vector normalized to unit top entry.
LambdaConnection build_borel_oper(const ModelContext& mc, const Rational& lambda,
                                  const Polynomial& q, const std::vector<Polynomial>& psis);

// Tube families: A = [[psi0, q Id + psi1], [Id, psi0]] in m x m blocks, with
// the family's symmetry conditions on psi0 and psi1.
LambdaConnection build_tube_oper(const ModelContext& mc, const Rational& lambda,
                                 const PMatrix& psi0, const Polynomial& q, const PMatrix& psi1);

// so partial-flag family: psi0 valued in so(W), borel_psis the embedded
// SO_{2k+1} Borel coefficients (index j -> exponent 2j-1), psihat_k the
// W-valued top coefficient.
LambdaConnection build_so_flag_oper(const ModelContext& mc, const Rational& lambda,
                                    const PMatrix& psi0, const std::vector<Polynomial>& borel_psis,
                                    const std::vector<Polynomial>& psihat_k);

// Characteristic-polynomial coefficients of a Higgs field (lambda = 0, sl_n):
// p_j = e_{j+1}(A(z)), j = 1..n-1, via Newton's identities.
std::vector<Polynomial> hitchin_map(const LambdaConnection& conn);

bool is_principal(const SlodowyData& sd);

// f + sum q_j e_{2 m_j} at lambda = 0 over principal Slodowy data.
LambdaConnection hitchin_section(const std::vector<Polynomial>& qs, const SlodowyData& sd,
                                 const LieAlgebra& g);

// Coordinates of a slice element f + v in the Slodowy data bases.
SlodowyCoefficients slice_coords(const PMatrix& x, const SlodowyData& sd, const LieAlgebra& g);

}  // namespace opslice
