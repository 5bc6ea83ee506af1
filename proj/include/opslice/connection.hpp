#pragma once

#include "opslice/minors.hpp"
#include "opslice/slodowy.hpp"

namespace opslice {

struct unsupported_position_error : error {
  using error::error;
};
struct not_an_oper_error : error {
  using error::error;
};
struct zero_scalar_error : error {
  using error::error;
};
struct dimension_mismatch_error : error {
  using error::error;
};

// omega = A(z) dz on a single affine chart with trivialized bundle.
struct LambdaConnection {
  Rational lambda;
  PMatrix A;
  const LieAlgebra* algebra = nullptr;
};

bool connection_in_algebra(const LambdaConnection& conn);
Json connection_to_json(const LambdaConnection& conn);

// Gauge transformation g(z) = l(z) * exp(x(z)) with l exactly invertible over
// the polynomial ring and x nilpotent-valued in the unipotent radical.
struct GaugePoly {
  PMatrix l, l_inv;
  PMatrix x;

  static GaugePoly identity(int n);
  static GaugePoly unipotent(PMatrix x);
  static GaugePoly levi(PMatrix l, PMatrix l_inv);

  PMatrix realize() const;          // l * exp(x)
  PMatrix realize_inverse() const;  // exp(-x) * l_inv
};

Json gauge_to_json(const GaugePoly& g);
GaugePoly gauge_from_json(const Json& j);

// Normal-form data: A = f_scale * f + psi0.c + q e + psihat_1.Vhat2 + sum psi_{m_j}.V_{2m_j}.
// f_scale is the coefficient of f in the companion base point; the C*-action
// scales it together with everything else.
struct SlodowyCoefficients {
  Rational lambda = 0;
  Rational f_scale = 1;
  std::vector<Polynomial> psi0;                   // coords in c_basis
  Polynomial q;                                   // coefficient along <e>
  std::map<int, std::vector<Polynomial>> psihat;  // m_1 -> Vhat2 coords; m_j -> V_{2m_j} coords

  bool operator==(const SlodowyCoefficients& o) const {
    return lambda == o.lambda && f_scale == o.f_scale && psi0 == o.psi0 && q == o.q &&
           psihat == o.psihat;
  }
};

Json coefficients_to_json(const SlodowyCoefficients& c);
SlodowyCoefficients coefficients_from_json(const Json& j);
void validate_dims(const SlodowyCoefficients& c, const SlodowyData& sd);

// A' = g^{-1} A g + lambda g^{-1} g'.
LambdaConnection gauge_transform(const LambdaConnection& conn, const GaugePoly& g);

// Coordinates of A(z) mod p in the negative-weight complement.
struct SecondFundamentalForm {
  std::map<int, std::vector<Polynomial>> by_weight;
  bool is_zero() const;
};
SecondFundamentalForm second_fundamental_form(const LambdaConnection& conn, const ParabolicData& pd);

struct OperCheck {
  bool ok = false;
  std::string reason;
  Polynomial minor_gcd;  // gcd of the maximal minors of the tangent map
};
OperCheck check_oper(const LambdaConnection& conn, const ParabolicData& pd);
bool is_oper(const LambdaConnection& conn, const ParabolicData& pd);

LambdaConnection slodowy_functor(const SlodowyData& sd, const SlodowyCoefficients& coeffs,
                                 const LieAlgebra& g);

enum class PositionHint { auto_detect, scaled_base, sl_borel, tube_block };

struct NormalizeResult {
  GaugePoly gauge;
  SlodowyCoefficients coeffs;
};

// Puts an oper connection into Slodowy normal form:
// gauge_transform(conn, gauge) == slodowy_functor(sd, coeffs) exactly.
NormalizeResult normalize(const LambdaConnection& conn, const SlodowyData& sd,
                          const ParabolicData& pd, PositionHint hint = PositionHint::auto_detect);

std::pair<Polynomial, SlodowyCoefficients> split_quadratic(const SlodowyCoefficients& c);
SlodowyCoefficients combine_quadratic(const Polynomial& q, const SlodowyCoefficients& c);

LambdaConnection cstar_act(const Rational& xi, const LambdaConnection& conn);
SlodowyCoefficients cstar_act_coeffs(const Rational& xi, const SlodowyCoefficients& c);

}  // namespace opslice
