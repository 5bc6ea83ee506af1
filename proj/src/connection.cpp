#include "opslice/connection.hpp"

namespace opslice {

bool connection_in_algebra(const LambdaConnection& conn) {
  const int deg = max_z_degree(conn.A);
  for (int d = 0; d <= deg; ++d)
    if (!contains(*conn.algebra, z_coefficient(conn.A, d))) return false;
  return true;
}

Json connection_to_json(const LambdaConnection& conn) {
  Json j;
  j["lambda"] = rational_to_string(conn.lambda);
  j["A"] = to_json(conn.A);
  j["algebra"] = algebra_to_json(*conn.algebra);
  return j;
}

GaugePoly GaugePoly::identity(int n) {
  GaugePoly g;
  g.l = promote(QMatrix::identity(n));
  g.l_inv = g.l;
  g.x = PMatrix(n, n);
  return g;
}

GaugePoly GaugePoly::unipotent(PMatrix x) {
  GaugePoly g = identity(x.rows());
  g.x = std::move(x);
  return g;
}

GaugePoly GaugePoly::levi(PMatrix l, PMatrix l_inv) {
  if (!(multiply(l, l_inv) == promote(QMatrix::identity(l.rows()))))
    throw error("levi part inverse is not exact");
  GaugePoly g;
  g.x = PMatrix(l.rows(), l.rows());
  g.l = std::move(l);
  g.l_inv = std::move(l_inv);
  return g;
}

PMatrix GaugePoly::realize() const { return multiply(l, nilpotent_exp(x)); }
PMatrix GaugePoly::realize_inverse() const { return multiply(nilpotent_exp(-x), l_inv); }

Json gauge_to_json(const GaugePoly& g) {
  Json j;
  j["l"] = to_json(g.l);
  j["l_inv"] = to_json(g.l_inv);
  j["x"] = to_json(g.x);
  return j;
}

GaugePoly gauge_from_json(const Json& j) {
  GaugePoly g = GaugePoly::levi(pmatrix_from_json(j.at("l")), pmatrix_from_json(j.at("l_inv")));
  g.x = pmatrix_from_json(j.at("x"));
  return g;
}

Json coefficients_to_json(const SlodowyCoefficients& c) {
  Json j;
  j["lambda"] = rational_to_string(c.lambda);
  j["f_scale"] = rational_to_string(c.f_scale);
  Json psi0 = Json::array();
  for (const auto& p : c.psi0) psi0.push_back(to_json(p));
  j["psi0"] = std::move(psi0);
  j["q"] = to_json(c.q);
  Json psihat = Json::object();
  for (const auto& [m, coords] : c.psihat) {
    Json arr = Json::array();
    for (const auto& p : coords) arr.push_back(to_json(p));
    psihat[std::to_string(m)] = std::move(arr);
  }
  j["psihat"] = std::move(psihat);
  return j;
}

SlodowyCoefficients coefficients_from_json(const Json& j) {
  SlodowyCoefficients c;
  c.lambda = rational_from_json(j.at("lambda"));
  if (j.contains("f_scale")) c.f_scale = rational_from_json(j.at("f_scale"));
  for (const auto& p : j.at("psi0")) c.psi0.push_back(polynomial_from_json(p));
  c.q = polynomial_from_json(j.at("q"));
  if (j.contains("psihat"))
    for (const auto& [key, arr] : j.at("psihat").items()) {
      std::vector<Polynomial> coords;
      for (const auto& p : arr) coords.push_back(polynomial_from_json(p));
      c.psihat[std::stoi(key)] = std::move(coords);
    }
  return c;
}

void validate_dims(const SlodowyCoefficients& c, const SlodowyData& sd) {
  if (static_cast<int>(c.psi0.size()) != sd.c_basis.dim())
    throw dimension_mismatch_error("psi0 length does not match dim c");
  for (const auto& [m, coords] : c.psihat) {
    if (m == 1) {
      if (static_cast<int>(coords.size()) != sd.vhat2.dim())
        throw dimension_mismatch_error("psihat_1 length does not match dim Vhat2");
      continue;
    }
    auto it = sd.hw_spaces.find(m);
    if (it == sd.hw_spaces.end()) throw dimension_mismatch_error("psihat key is not an exponent");
    if (static_cast<int>(coords.size()) != it->second.dim())
      throw dimension_mismatch_error("psihat length does not match dim V_{2m}");
  }
}

LambdaConnection gauge_transform(const LambdaConnection& conn, const GaugePoly& g) {
  PMatrix gm = g.realize();
  PMatrix gi = g.realize_inverse();
  PMatrix a = multiply(gi, multiply(conn.A, gm));
  if (conn.lambda != 0) {
    PMatrix corr = multiply(gi, derivative(gm));
    corr.scale(Polynomial(conn.lambda));
    a += corr;
  }
  return {conn.lambda, std::move(a), conn.algebra};
}

SecondFundamentalForm second_fundamental_form(const LambdaConnection& conn, const ParabolicData& pd) {
  SecondFundamentalForm sff;
  auto comps = pd.grading.decompose_poly(*conn.algebra, conn.A);
  for (auto& [w, m] : comps) {
    if (w >= 0) continue;
    auto coords = coordinates_poly(pd.grading.spaces.at(w), m);
    if (!coords) throw error("internal: weight component outside its weight space");
    sff.by_weight.emplace(w, std::move(*coords));
  }
  return sff;
}

bool SecondFundamentalForm::is_zero() const {
  for (const auto& [w, coords] : by_weight)
    for (const auto& p : coords)
      if (!p.is_zero()) return false;
  return true;
}

OperCheck check_oper(const LambdaConnection& conn, const ParabolicData& pd) {
  OperCheck res;
  if (!connection_in_algebra(conn)) {
    res.reason = "connection matrix leaves the algebra";
    return res;
  }
  const LieAlgebra& g = *conn.algebra;
  auto comps = pd.grading.decompose_poly(g, conn.A);
  for (const auto& [w, m] : comps) {
    if (w < -2 && !m.is_zero()) {
      res.reason = "nonzero component in weight " + std::to_string(w);
      return res;
    }
  }
  auto it = comps.find(-2);
  if (it == comps.end()) {
    res.reason = "weight -2 component vanishes identically";
    return res;
  }
  // Open-orbit position for every z: the tangent map y -> [y, A_{-2}(z)] from
  // g_0 to g_{-2} stays surjective, i.e. the gcd of its maximal minors is a
  // nonzero constant.
  const SubspaceBasis* gm2 = pd.grading.space(-2);
  const SubspaceBasis& levi = pd.levi_basis;
  PMatrix tangent(gm2->dim(), levi.dim());
  for (int k = 0; k < levi.dim(); ++k) {
    PMatrix br = bracket(promote(levi.vectors[k]), it->second);
    auto coords = coordinates_poly(*gm2, br);
    if (!coords) throw error("internal: [g_0, A_{-2}] left g_{-2}");
    for (int i = 0; i < gm2->dim(); ++i) tangent.at(i, k) = (*coords)[i];
  }
  res.minor_gcd = poly_matrix_minor_gcd(tangent, gm2->dim());
  if (res.minor_gcd.is_zero()) {
    res.reason = "weight -2 component never reaches the open orbit";
    return res;
  }
  if (res.minor_gcd.degree() > 0) {
    res.reason = "weight -2 component leaves the open orbit at the zeros of " + res.minor_gcd.to_string();
    return res;
  }
  res.ok = true;
  return res;
}

bool is_oper(const LambdaConnection& conn, const ParabolicData& pd) { return check_oper(conn, pd).ok; }

LambdaConnection slodowy_functor(const SlodowyData& sd, const SlodowyCoefficients& coeffs,
                                 const LieAlgebra& g) {
  validate_dims(coeffs, sd);
  PMatrix a(g.n, g.n);
  QMatrix f = sd.triple.f;
  f.scale(coeffs.f_scale);
  a += promote(f);
  for (int k = 0; k < sd.c_basis.dim(); ++k) axpy(a, coeffs.psi0[k], sd.c_basis.vectors[k]);
  axpy(a, coeffs.q, sd.triple.e);
  for (const auto& [m, coords] : coeffs.psihat) {
    const std::vector<QMatrix>& vecs = (m == 1) ? sd.vhat2.vectors : sd.hw_spaces.at(m).vectors;
    for (size_t k = 0; k < coords.size(); ++k) axpy(a, coords[k], vecs[k]);
  }
  return {coeffs.lambda, std::move(a), &g};
}

namespace {

// Position step: a Levi gauge and a base scale putting A_{-2} on f.
struct Position {
  GaugePoly gauge;
  Rational base = 1;
  bool gauge_is_identity = true;
};

bool poly_coords_constant(const std::vector<Polynomial>& coords) {
  for (const auto& p : coords)
    if (!p.is_constant()) return false;
  return true;
}

std::optional<Position> detect_scaled_base(const PMatrix& a_m2, const SlodowyData& sd,
                                           const LieAlgebra& g) {
  auto c = coordinates_poly(make_subspace(g, {sd.triple.f}), a_m2);
  if (!c || c->size() != 1 || !(*c)[0].is_constant() || (*c)[0].is_zero()) return std::nullopt;
  Position pos;
  pos.gauge = GaugePoly::identity(g.n);
  pos.base = (*c)[0].constant_term();
  return pos;
}

std::optional<Position> detect_sl_borel(const PMatrix& a_m2, const SlodowyData& sd,
                                        const LieAlgebra& g) {
  if (g.family != Family::sl) return std::nullopt;
  const int n = g.n;
  // expect constant nonzero subdiagonal, zero elsewhere; f is the ones subdiagonal
  QMatrix ones_sub(n, n);
  for (int i = 0; i + 1 < n; ++i) ones_sub.at(i + 1, i) = 1;
  if (sd.triple.f != ones_sub) return std::nullopt;
  Vec sub(n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Polynomial& p = a_m2.at(i, j);
      if (p.is_zero()) continue;
      if (j != i - 1 || !p.is_constant()) return std::nullopt;
      sub[j] = p.constant_term();
    }
  for (const auto& s : sub)
    if (s == 0) return std::nullopt;
  // diagonal l with a_i d_i / d_{i+1} = 1
  Vec d(n);
  d[0] = 1;
  for (int i = 0; i + 1 < n; ++i) d[i + 1] = sub[i] * d[i];
  QMatrix l(n, n), l_inv(n, n);
  for (int i = 0; i < n; ++i) {
    l.at(i, i) = d[i];
    l_inv.at(i, i) = Rational(1) / d[i];
  }
  Position pos;
  pos.gauge = GaugePoly::levi(promote(l), promote(l_inv));
  pos.gauge_is_identity = false;
  return pos;
}

// Polynomial matrix inverse for constant nonzero determinant, by cofactors.
std::optional<PMatrix> poly_inverse_constant_det(const PMatrix& m) {
  const int n = m.rows();
  Polynomial det = poly_det(m);
  if (det.is_zero() || det.degree() > 0) return std::nullopt;
  const Rational dinv = Rational(1) / det.constant_term();
  PMatrix adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PMatrix sub(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          sub.at(rr, cc) = m.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Polynomial cof = poly_det(sub);
      if ((i + j) % 2 == 1) cof = -cof;
      adj.at(j, i) = cof * dinv;
    }
  return adj;
}

std::optional<Position> detect_tube_block(const PMatrix& a_m2, const SlodowyData& sd,
                                          const LieAlgebra& g) {
  // Only the sl tube: over Q the sp/so block congruence is not always solvable.
  if (g.family != Family::sl || g.n % 2 != 0) return std::nullopt;
  const int m = g.n / 2;
  QMatrix block_f(g.n, g.n);
  for (int i = 0; i < m; ++i) block_f.at(m + i, i) = 1;
  if (sd.triple.f != block_f) return std::nullopt;
  // lower-left block C(z), everything else zero
  PMatrix c(m, m);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      const Polynomial& p = a_m2.at(i, j);
      if (p.is_zero()) continue;
      if (i < m || j >= m) return std::nullopt;
      c.at(i - m, j) = p;
    }
  auto c_inv = poly_inverse_constant_det(c);
  if (!c_inv) return std::nullopt;
  PMatrix l(g.n, g.n), l_inv(g.n, g.n);
  for (int i = 0; i < m; ++i) {
    l.at(i, i) = Polynomial(1);
    l_inv.at(i, i) = Polynomial(1);
    for (int j = 0; j < m; ++j) {
      l.at(m + i, m + j) = c.at(i, j);
      l_inv.at(m + i, m + j) = c_inv->at(i, j);
    }
  }
  Position pos;
  pos.gauge = GaugePoly::levi(std::move(l), std::move(l_inv));
  pos.gauge_is_identity = false;
  return pos;
}

}  // namespace

NormalizeResult normalize(const LambdaConnection& conn, const SlodowyData& sd,
                          const ParabolicData& pd, PositionHint hint) {
  OperCheck oc = check_oper(conn, pd);
  if (!oc.ok) throw not_an_oper_error("not an oper: " + oc.reason);
  const LieAlgebra& g = *conn.algebra;

  auto comps = pd.grading.decompose_poly(g, conn.A);
  PMatrix a_m2 = comps.count(-2) ? comps.at(-2) : PMatrix(g.n, g.n);

  std::optional<Position> pos;
  switch (hint) {
    case PositionHint::scaled_base: pos = detect_scaled_base(a_m2, sd, g); break;
    case PositionHint::sl_borel: pos = detect_sl_borel(a_m2, sd, g); break;
    case PositionHint::tube_block: pos = detect_tube_block(a_m2, sd, g); break;
    case PositionHint::auto_detect:
      pos = detect_scaled_base(a_m2, sd, g);
      if (!pos) pos = detect_sl_borel(a_m2, sd, g);
      if (!pos) pos = detect_tube_block(a_m2, sd, g);
      break;
  }
  if (!pos) throw unsupported_position_error("no supported closed-form position normalization applies");

  LambdaConnection cur = pos->gauge_is_identity ? conn : gauge_transform(conn, pos->gauge);
  const Rational base = pos->base;

  SliceSplitter sp = make_slice_splitter(g, sd);
  SlodowyCoefficients coeffs;
  coeffs.lambda = conn.lambda;
  coeffs.f_scale = base;

  PMatrix u_prod = promote(QMatrix::identity(g.n));
  for (const auto& lv : sp.levels) {
    auto cc = pd.grading.decompose_poly(g, cur.A);
    auto it = cc.find(lv.d);
    const int nv = static_cast<int>(lv.v_vectors.size());
    std::vector<Polynomial> vcoef(nv), mu(lv.raise_vectors.size());
    if (it != cc.end()) {
      auto gd_coords = coordinates_poly(lv.gd, it->second);
      if (!gd_coords) throw error("internal: weight component outside its weight space");
      // split along g_d = V_d + ad_f(g_{d+2})
      std::vector<Polynomial> split(lv.split_inverse.rows());
      for (int i = 0; i < lv.split_inverse.rows(); ++i)
        for (int j = 0; j < lv.split_inverse.cols(); ++j)
          if (lv.split_inverse.at(i, j) != 0)
            split[i] += (*gd_coords)[j] * Polynomial(lv.split_inverse.at(i, j));
      vcoef.assign(split.begin(), split.begin() + nv);
      mu.assign(split.begin() + nv, split.end());
    }
    if (lv.d == 0) {
      coeffs.psi0 = vcoef;
    } else if (lv.d == 2) {
      // splitter orders V_2 as [e, Vhat2...]
      coeffs.q = vcoef.empty() ? Polynomial() : vcoef[0];
      std::vector<Polynomial> hat(vcoef.begin() + 1, vcoef.end());
      coeffs.psihat[1] = std::move(hat);
    } else if (nv > 0) {
      coeffs.psihat[lv.d / 2] = vcoef;
    }
    bool mu_zero = true;
    for (const auto& p : mu)
      if (!p.is_zero()) mu_zero = false;
    if (mu_zero) continue;
    PMatrix x(g.n, g.n);
    for (size_t k = 0; k < mu.size(); ++k) axpy(x, mu[k], lv.raise_vectors[k]);
    x.scale(Rational(-1) / base);
    cur = gauge_transform(cur, GaugePoly::unipotent(x));
    u_prod = multiply(u_prod, nilpotent_exp(x));
  }

  LambdaConnection expected = slodowy_functor(sd, coeffs, g);
  if (!(cur.A == expected.A))
    throw error("internal: normalization sweep did not reach the normal form");

  NormalizeResult out;
  out.gauge = pos->gauge;
  out.gauge.x = nilpotent_log(u_prod);
  out.coeffs = std::move(coeffs);
  return out;
}

std::pair<Polynomial, SlodowyCoefficients> split_quadratic(const SlodowyCoefficients& c) {
  SlodowyCoefficients rest = c;
  rest.q = Polynomial();
  return {c.q, rest};
}

SlodowyCoefficients combine_quadratic(const Polynomial& q, const SlodowyCoefficients& c) {
  SlodowyCoefficients out = c;
  out.q = q;
  return out;
}

LambdaConnection cstar_act(const Rational& xi, const LambdaConnection& conn) {
  if (xi == 0) throw zero_scalar_error("the torus action needs a nonzero scalar");
  LambdaConnection out = conn;
  out.lambda *= xi;
  out.A.scale(Polynomial(xi));
  return out;
}

SlodowyCoefficients cstar_act_coeffs(const Rational& xi, const SlodowyCoefficients& c) {
  if (xi == 0) throw zero_scalar_error("the torus action needs a nonzero scalar");
  SlodowyCoefficients out = c;
  out.lambda *= xi;
  out.f_scale *= xi;
  for (auto& p : out.psi0) p = p * xi;
  out.q = out.q * xi;
  for (auto& [m, coords] : out.psihat)
    for (auto& p : coords) p = p * xi;
  return out;
}

}  // namespace opslice
