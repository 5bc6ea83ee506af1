#include "opslice/models.hpp"

namespace opslice {

std::string model_family_name(ModelFamily f) {
  switch (f) {
    case ModelFamily::sln_borel: return "sln_borel";
    case ModelFamily::tube_sl: return "tube_sl";
    case ModelFamily::tube_sp: return "tube_sp";
    case ModelFamily::tube_so4n: return "tube_so4n";
    case ModelFamily::tube_so_line: return "tube_so_line";
    case ModelFamily::so_partial_flag: return "so_partial_flag";
  }
  return "?";
}

ModelFamily model_family_from_name(const std::string& s) {
  if (s == "sln_borel") return ModelFamily::sln_borel;
  if (s == "tube_sl") return ModelFamily::tube_sl;
  if (s == "tube_sp") return ModelFamily::tube_sp;
  if (s == "tube_so4n") return ModelFamily::tube_so4n;
  if (s == "tube_so_line") return ModelFamily::tube_so_line;
  if (s == "so_partial_flag") return ModelFamily::so_partial_flag;
  throw unsupported_family_error("unknown model family: " + s);
}

namespace {

QMatrix standard_symplectic_form(int m) {
  QMatrix w(m, m);
  for (int i = 0; i < m; ++i) w.at(i, m - 1 - i) = (i < m / 2) ? 1 : -1;
  return w;
}

Sl2Triple block_identity_triple(int m) {
  const int n = 2 * m;
  QMatrix f(n, n), h(n, n), e(n, n);
  for (int i = 0; i < m; ++i) {
    e.at(i, m + i) = 1;
    f.at(m + i, i) = 1;
    h.at(i, i) = 1;
    h.at(m + i, m + i) = -1;
  }
  return {f, h, e};
}

// Index set {1..k, (n+1)/2, n-k+1..n} (1-based), the coordinates of the
// embedded (2k+1)-dimensional irreducible block; pairing-closed for the
// antidiagonal form.
std::vector<int> flag_block_indices(int n, int k) {
  std::vector<int> idx;
  for (int i = 0; i < k; ++i) idx.push_back(i);
  idx.push_back((n - 1) / 2);
  for (int i = n - k; i < n; ++i) idx.push_back(i);
  return idx;
}

std::vector<int> flag_middle_indices(int n, int k) {
  std::vector<int> block = flag_block_indices(n, k);
  std::vector<int> mid;
  for (int i = 0; i < n; ++i) {
    bool in_block = false;
    for (int b : block)
      if (b == i) in_block = true;
    if (!in_block) mid.push_back(i);
  }
  return mid;
}

QMatrix embed(const QMatrix& small, const std::vector<int>& idx, int n) {
  QMatrix big(n, n);
  for (int a = 0; a < small.rows(); ++a)
    for (int b = 0; b < small.cols(); ++b)
      if (small.at(a, b) != 0) big.at(idx[a], idx[b]) = small.at(a, b);
  return big;
}

PMatrix embed(const PMatrix& small, const std::vector<int>& idx, int n) {
  PMatrix big(n, n);
  for (int a = 0; a < small.rows(); ++a)
    for (int b = 0; b < small.cols(); ++b)
      if (!small.at(a, b).is_zero()) big.at(idx[a], idx[b]) = small.at(a, b);
  return big;
}

void check_descriptor(const ModelDescriptor& d) {
  switch (d.family) {
    case ModelFamily::sln_borel:
      if (d.n < 2) throw unsupported_family_error("sln_borel needs n >= 2");
      break;
    case ModelFamily::tube_sl:
    case ModelFamily::tube_sp:
    case ModelFamily::tube_so4n:
      if (d.n < 1) throw unsupported_family_error("tube families need n >= 1");
      break;
    case ModelFamily::tube_so_line:
      if (d.n < 5) throw unsupported_family_error("tube_so_line needs n >= 5");
      break;
    case ModelFamily::so_partial_flag:
      if (d.k < 1 || 2 * d.k >= d.n) throw unsupported_family_error("so_partial_flag needs 1 <= k < n/2");
      if (d.n % 2 == 0 && d.k > 1)
        throw unsupported_family_error("so_partial_flag with even n is only supported for k = 1");
      if (d.n < 5) throw unsupported_family_error("so_partial_flag needs n >= 5");
      break;
  }
}

}  // namespace

LieAlgebra model_algebra(const ModelDescriptor& d) {
  check_descriptor(d);
  switch (d.family) {
    case ModelFamily::sln_borel: return construct_classical(Family::sl, d.n);
    case ModelFamily::tube_sl: return construct_classical(Family::sl, 2 * d.n);
    case ModelFamily::tube_sp: return construct_classical(Family::sp, 2 * d.n);
    case ModelFamily::tube_so4n: {
      // orthogonal form [[0, W],[-W, 0]] with W the symplectic form on C^{2n}
      const int m = 2 * d.n;
      QMatrix w = standard_symplectic_form(m);
      QMatrix j(2 * m, 2 * m);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          j.at(a, m + b) = w.at(a, b);
          j.at(m + a, b) = -w.at(a, b);
        }
      return construct_orthogonal(2 * m, std::move(j));
    }
    case ModelFamily::tube_so_line:
    case ModelFamily::so_partial_flag: return construct_classical(Family::so, d.n);
  }
  throw unsupported_family_error("unreachable");
}

Sl2Triple model_triple(const ModelDescriptor& d, const LieAlgebra& g) {
  check_descriptor(d);
  switch (d.family) {
    case ModelFamily::sln_borel: return principal_triple(g);
    case ModelFamily::tube_sl:
    case ModelFamily::tube_sp:
    case ModelFamily::tube_so4n: {
      Sl2Triple t = block_identity_triple(d.n * (d.family == ModelFamily::tube_so4n ? 2 : 1));
      if (!validate_triple(t) || !contains(g, t.e)) throw error("internal: tube triple failed");
      return t;
    }
    case ModelFamily::tube_so_line:
    case ModelFamily::so_partial_flag: {
      const int k = d.family == ModelFamily::tube_so_line ? 1 : d.k;
      if (d.n % 2 == 1) {
        // embed the principal triple of so_{2k+1} on the block index set
        LieAlgebra small = construct_classical(Family::so, 2 * k + 1);
        Sl2Triple ps = principal_triple(small);
        std::vector<int> idx = flag_block_indices(d.n, k);
        Sl2Triple t{embed(ps.f, idx, d.n), embed(ps.h, idx, d.n), embed(ps.e, idx, d.n)};
        if (!validate_triple(t) || !contains(g, t.e)) throw error("internal: embedded flag triple failed");
        return t;
      }
      // even n, k = 1: h = diag(2, 0, ..., 0, -2) and a generic weight-2 element
      QMatrix h(d.n, d.n);
      h.at(0, 0) = 2;
      h.at(d.n - 1, d.n - 1) = -2;
      return complete_even_triple_from_h(g, h);
    }
  }
  throw unsupported_family_error("unreachable");
}

ModuleMultiplicities expected_multiplicities(const ModelDescriptor& d) {
  check_descriptor(d);
  ModuleMultiplicities mm;
  mm.entries[0] = 0;
  const int n = d.n;
  switch (d.family) {
    case ModelFamily::sln_borel:
      for (int m = 1; m < n; ++m) mm.entries[2 * m] = 1;
      break;
    case ModelFamily::tube_sl:
      mm.entries[0] = n * n - 1;
      mm.entries[2] = n * n;
      break;
    case ModelFamily::tube_sp:
      mm.entries[0] = n * (n - 1) / 2;
      mm.entries[2] = n * (n + 1) / 2;
      break;
    case ModelFamily::tube_so4n:
      mm.entries[0] = n * (2 * n + 1);
      mm.entries[2] = n * (2 * n - 1);
      break;
    case ModelFamily::tube_so_line:
      // dim so(W) for W of rank n-2; the multiplicity space of the trivials
      mm.entries[0] = (n - 3) * (n - 4) / 2;
      mm.entries[2] = n - 2;
      break;
    case ModelFamily::so_partial_flag: {
      const int r = n - 2 * d.k - 1;  // rank of W; r = 0 degenerates to the Borel
      mm.entries[0] = r * (r - 1) / 2;
      if (r > 0) mm.entries[2 * d.k] += r;
      for (int j = 1; j <= d.k; ++j) mm.entries[4 * j - 2] += 1;
      break;
    }
  }
  return mm;
}

int expected_centralizer_dim(const ModelDescriptor& d) { return expected_multiplicities(d).at(0); }

ModelContext make_model_context(const ModelDescriptor& d) {
  ModelContext mc;
  mc.desc = d;
  mc.algebra = std::make_shared<LieAlgebra>(model_algebra(d));
  mc.triple = model_triple(d, *mc.algebra);
  GradedDecomposition gr = ad_h_grading(mc.triple, *mc.algebra);
  mc.sd = slodowy_data(mc.triple, *mc.algebra, gr);
  mc.pd = parabolic_data(mc.triple, *mc.algebra, std::move(gr));
  return mc;
}

ModelContext make_context(std::shared_ptr<LieAlgebra> algebra, const Sl2Triple& t) {
  ModelContext mc;
  mc.algebra = std::move(algebra);
  mc.triple = t;
  GradedDecomposition gr = ad_h_grading(mc.triple, *mc.algebra);
  mc.sd = slodowy_data(mc.triple, *mc.algebra, gr);
  mc.pd = parabolic_data(mc.triple, *mc.algebra, std::move(gr));
  return mc;
}

LambdaConnection build_borel_oper(const ModelContext& mc, const Rational& lambda,
                                  const Polynomial& q, const std::vector<Polynomial>& psis) {
  if (mc.desc.family != ModelFamily::sln_borel) throw shape_mismatch_error("not a Borel model");
  const int n = mc.desc.n;
  if (static_cast<int>(psis.size()) != std::max(0, n - 2))
    throw shape_mismatch_error("need one coefficient per exponent 2..n-1");
  SlodowyCoefficients coeffs;
  coeffs.lambda = lambda;
  coeffs.q = q;
  coeffs.psihat[1] = {};
  for (int m = 2; m <= n - 1; ++m) {
    const QMatrix& v = mc.sd.hw_spaces.at(m).vectors[0];
    // normalize the highest-weight vector to unit E_{1,1+m} entry
    const Rational top = v.at(0, m);
    if (top == 0) throw error("internal: highest-weight vector has vanishing top entry");
    coeffs.psihat[m] = {psis[m - 2] / top};
  }
  return slodowy_functor(mc.sd, coeffs, *mc.algebra);
}

LambdaConnection build_tube_oper(const ModelContext& mc, const Rational& lambda,
                                 const PMatrix& psi0, const Polynomial& q, const PMatrix& psi1) {
  const auto fam = mc.desc.family;
  if (fam != ModelFamily::tube_sl && fam != ModelFamily::tube_sp && fam != ModelFamily::tube_so4n)
    throw shape_mismatch_error("not a tube model");
  const LieAlgebra& g = *mc.algebra;
  const int m = g.n / 2;
  if (psi0.rows() != m || psi0.cols() != m || psi1.rows() != m || psi1.cols() != m)
    throw shape_mismatch_error("tube blocks must be " + std::to_string(m) + " x " + std::to_string(m));

  PMatrix a(g.n, g.n);
  for (int i = 0; i < m; ++i) {
    a.at(m + i, i) = Polynomial(1);
    a.at(i, m + i) = q;
    for (int j = 0; j < m; ++j) {
      a.at(i, j) += psi0.at(i, j);
      a.at(m + i, m + j) += psi0.at(i, j);
      a.at(i, m + j) += psi1.at(i, j);
    }
  }
  // diag(X, X) must centralize the triple inside g and [[0,Y],[0,0]] must lie
  // in g: this is exactly the traceless/symmetry condition of the family.
  PMatrix psi0_placed(g.n, g.n), psi1_placed(g.n, g.n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      psi0_placed.at(i, j) = psi0.at(i, j);
      psi0_placed.at(m + i, m + j) = psi0.at(i, j);
      psi1_placed.at(i, m + j) = psi1.at(i, j);
    }
  const int d0 = max_z_degree(psi0_placed);
  for (int dz = 0; dz <= d0; ++dz)
    if (!contains(g, z_coefficient(psi0_placed, dz)))
      throw symmetry_violation_error("psi0 violates the family structure conditions");
  const int d1 = max_z_degree(psi1_placed);
  for (int dz = 0; dz <= d1; ++dz)
    if (!contains(g, z_coefficient(psi1_placed, dz)))
      throw symmetry_violation_error("psi1 violates the family structure conditions");
  return {lambda, std::move(a), mc.algebra.get()};
}

LambdaConnection build_so_flag_oper(const ModelContext& mc, const Rational& lambda,
                                    const PMatrix& psi0, const std::vector<Polynomial>& borel_psis,
                                    const std::vector<Polynomial>& psihat_k) {
  if (mc.desc.family != ModelFamily::so_partial_flag && mc.desc.family != ModelFamily::tube_so_line)
    throw shape_mismatch_error("not a partial-flag model");
  const int n = mc.desc.n;
  const int k = mc.desc.family == ModelFamily::tube_so_line ? 1 : mc.desc.k;
  if (n % 2 == 0) throw shape_mismatch_error("block form needs the odd-n embedding");
  const int r = n - 2 * k - 1;
  if (static_cast<int>(borel_psis.size()) != k)
    throw shape_mismatch_error("need one Borel coefficient per exponent 1,3,..,2k-1");
  if (static_cast<int>(psihat_k.size()) != r) throw shape_mismatch_error("psihat_k must have W-rank entries");
  if (psi0.rows() != r || psi0.cols() != r) throw shape_mismatch_error("psi0 must be W-rank square");

  // embedded SO_{2k+1} Borel factor
  LieAlgebra small = construct_classical(Family::so, 2 * k + 1);
  Sl2Triple ps = principal_triple(small);
  SlodowyData small_sd = slodowy_data(ps, small);
  SlodowyCoefficients small_coeffs;
  small_coeffs.lambda = lambda;
  small_coeffs.q = borel_psis[0];
  small_coeffs.psihat[1] = {};
  for (size_t j = 1; j < borel_psis.size(); ++j) small_coeffs.psihat[2 * static_cast<int>(j) + 1] = {borel_psis[j]};
  LambdaConnection small_conn = slodowy_functor(small_sd, small_coeffs, small);

  std::vector<int> block = flag_block_indices(n, k);
  std::vector<int> mid = flag_middle_indices(n, k);
  PMatrix a = embed(small_conn.A, block, n);

  // psi0 valued in so(W) on the middle coordinates
  const int dz0 = max_z_degree(psi0);
  QMatrix j_small(r, r);
  for (int i = 0; i < r; ++i) j_small.at(i, r - 1 - i) = 1;
  for (int dz = 0; dz <= dz0; ++dz)
    if (!preserves_form(z_coefficient(psi0, dz), j_small))
      throw symmetry_violation_error("psi0 must preserve the W form");
  a += embed(psi0, mid, n);

  // psihat_k on the vectors E_{1, w} - E_{n+1-w, n}: the W column against the
  // lowest block coordinate and its dual against the highest.
  for (int j = 0; j < r; ++j) {
    const int w = mid[j];
    QMatrix v(n, n);
    v.at(0, w) = 1;
    v.at(n - 1 - w, n - 1) = -1;
    axpy(a, psihat_k[j], v);
  }
  return {lambda, std::move(a), mc.algebra.get()};
}

std::vector<Polynomial> hitchin_map(const LambdaConnection& conn) {
  if (conn.lambda != 0) throw lambda_nonzero_error("the invariant-coefficient map needs lambda = 0");
  if (conn.algebra->family != Family::sl) throw unsupported_family_error("hitchin_map is for sl_n");
  const int n = conn.algebra->n;
  // Newton's identities: e_k = (1/k) sum_{i<=k} (-1)^{i-1} e_{k-i} s_i.
  std::vector<Polynomial> s(n + 1), e(n + 1);
  e[0] = Polynomial(1);
  PMatrix power = conn.A;
  for (int kk = 1; kk <= n; ++kk) {
    s[kk] = power.trace();
    if (kk < n) power = multiply(power, conn.A);
  }
  for (int kk = 1; kk <= n; ++kk) {
    Polynomial acc;
    for (int i = 1; i <= kk; ++i) {
      Polynomial term = e[kk - i] * s[i];
      if (i % 2 == 0) term = -term;
      acc += term;
    }
    e[kk] = acc / Rational(kk);
  }
  // p_j = (-1)^{j+1} (coefficient of t^{n-j-1} in det(tI - A)) = e_{j+1}
  std::vector<Polynomial> p(n - 1);
  for (int j = 1; j <= n - 1; ++j) p[j - 1] = e[j + 1];
  return p;
}

bool is_principal(const SlodowyData& sd) {
  if (sd.c_basis.dim() != 0) return false;
  for (const auto& [m, s] : sd.hw_spaces)
    if (s.dim() != 1) return false;
  return true;
}

LambdaConnection hitchin_section(const std::vector<Polynomial>& qs, const SlodowyData& sd,
                                 const LieAlgebra& g) {
  if (!is_principal(sd)) throw not_principal_error("the section needs principal Slodowy data");
  if (qs.size() != sd.exponents.size()) throw dimension_mismatch_error("one q per exponent");
  PMatrix a = promote(sd.triple.f);
  // e itself spans V_2; higher weights use the computed kernel basis vector,
  // the same directions slice_coords reads off.
  for (size_t j = 0; j < qs.size(); ++j) {
    const int m = sd.exponents[j];
    axpy(a, qs[j], m == 1 ? sd.triple.e : sd.hw_spaces.at(m).vectors[0]);
  }
  return {Rational(0), std::move(a), &g};
}

SlodowyCoefficients slice_coords(const PMatrix& x, const SlodowyData& sd, const LieAlgebra& g) {
  PMatrix v = x - promote(sd.triple.f);
  auto comps = sd.grading.decompose_poly(g, v);
  SlodowyCoefficients c;
  c.lambda = 0;
  c.psi0.assign(sd.c_basis.dim(), Polynomial());
  c.psihat[1] = std::vector<Polynomial>(sd.vhat2.dim());
  for (int m : sd.exponents)
    if (m != 1) c.psihat[m] = std::vector<Polynomial>(sd.hw_spaces.at(m).dim());
  for (const auto& [w, comp] : comps) {
    if (w < 0 || w % 2 != 0) throw not_in_slice_error("element is not on the slice");
    if (w == 0) {
      auto cc = coordinates_poly(sd.c_basis, comp);
      if (!cc) throw not_in_slice_error("weight-0 part is not in the centralizer");
      c.psi0 = *cc;
    } else if (w == 2) {
      SubspaceBasis split = make_subspace(g, [&] {
        std::vector<QMatrix> vs{sd.triple.e};
        for (const auto& u : sd.vhat2.vectors) vs.push_back(u);
        return vs;
      }());
      auto cc = coordinates_poly(split, comp);
      if (!cc) throw not_in_slice_error("weight-2 part is not in V_2");
      c.q = (*cc)[0];
      c.psihat[1].assign(cc->begin() + 1, cc->end());
    } else {
      auto it = sd.hw_spaces.find(w / 2);
      if (it == sd.hw_spaces.end()) throw not_in_slice_error("component off the highest-weight spaces");
      auto cc = coordinates_poly(it->second, comp);
      if (!cc) throw not_in_slice_error("component off the highest-weight spaces");
      c.psihat[w / 2] = *cc;
    }
  }
  return c;
}

}  // namespace opslice
