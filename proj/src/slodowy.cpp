#include "opslice/slodowy.hpp"

namespace opslice {

SubspaceBasis centralizer_of_e(const Sl2Triple& t, const LieAlgebra& g) {
  QMatrix ad_e = adjoint_operator(t.e, g);
  std::vector<QMatrix> vecs;
  for (const auto& v : kernel_basis(ad_e)) {
    QMatrix m(g.n, g.n);
    for (int k = 0; k < g.dim(); ++k) {
      if (v[k] == 0) continue;
      QMatrix b = g.basis[k];
      b.scale(v[k]);
      m += b;
    }
    vecs.push_back(std::move(m));
  }
  return make_subspace(g, std::move(vecs));
}

SlodowyData slodowy_data(const Sl2Triple& t, const LieAlgebra& g) {
  return slodowy_data(t, g, ad_h_grading(t, g));
}

SlodowyData slodowy_data(const Sl2Triple& t, const LieAlgebra& g, GradedDecomposition grading) {
  if (!is_even(grading)) throw not_even_error("triple is not even");
  SlodowyData sd;
  sd.triple = t;
  sd.grading = std::move(grading);

  QMatrix ad_e = adjoint_operator(t.e, g);
  for (int w : sd.grading.weights) {
    if (w < 0) continue;
    const SubspaceBasis& s = sd.grading.spaces.at(w);
    QMatrix restricted(g.dim(), s.dim());
    for (int k = 0; k < s.dim(); ++k) {
      auto c = coordinates(g, bracket(t.e, s.vectors[k]));
      if (!c) throw not_in_algebra_error("bracket left the algebra");
      for (int i = 0; i < g.dim(); ++i) restricted.at(i, k) = (*c)[i];
    }
    std::vector<QMatrix> vw;
    for (const auto& kv : kernel_basis(restricted)) {
      QMatrix m(g.n, g.n);
      for (int k = 0; k < s.dim(); ++k) {
        if (kv[k] == 0) continue;
        QMatrix b = s.vectors[k];
        b.scale(kv[k]);
        m += b;
      }
      vw.push_back(std::move(m));
    }
    if (w == 0) {
      sd.c_basis = make_subspace(g, std::move(vw));
    } else if (!vw.empty()) {
      sd.exponents.push_back(w / 2);
      sd.hw_spaces.emplace(w / 2, make_subspace(g, std::move(vw)));
    }
  }

  // V_2 = <e> + Vhat_2, Vhat_2 the kernel of the Killing functional B(f,-).
  const SubspaceBasis& v2 = sd.hw_spaces.at(1);
  QMatrix ad_f = adjoint_operator(t.f, g);
  QMatrix functional(1, v2.dim());
  for (int k = 0; k < v2.dim(); ++k) {
    QMatrix ad_v = adjoint_operator(v2.vectors[k], g);
    Rational tr(0);
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j) tr += ad_f.at(i, j) * ad_v.at(j, i);
    functional.at(0, k) = tr;
  }
  std::vector<QMatrix> vhat;
  for (const auto& kv : kernel_basis(functional)) {
    QMatrix m(g.n, g.n);
    for (int k = 0; k < v2.dim(); ++k) {
      if (kv[k] == 0) continue;
      QMatrix b = v2.vectors[k];
      b.scale(kv[k]);
      m += b;
    }
    vhat.push_back(std::move(m));
  }
  sd.vhat2 = make_subspace(g, std::move(vhat));
  sd.e_line = make_subspace(g, {t.e});
  return sd;
}

ParabolicData parabolic_data(const Sl2Triple& t, const LieAlgebra& g) {
  return parabolic_data(t, g, ad_h_grading(t, g));
}

ParabolicData parabolic_data(const Sl2Triple& t, const LieAlgebra& g, GradedDecomposition grading) {
  if (!is_even(grading)) throw not_even_error("triple is not even");
  (void)t;
  ParabolicData pd;
  pd.grading = std::move(grading);

  auto collect = [&](int min_weight) {
    std::vector<QMatrix> vecs;
    for (int w : pd.grading.weights) {
      if (w < min_weight) continue;
      for (const auto& v : pd.grading.spaces.at(w).vectors) vecs.push_back(v);
    }
    return make_subspace(g, std::move(vecs));
  };

  pd.p_basis = collect(0);
  pd.levi_basis = make_subspace(g, pd.grading.spaces.at(0).vectors);
  const int m_top = pd.grading.top_weight() / 2;
  for (int i = 1; i <= m_top; ++i) pd.u_filtration.push_back(collect(2 * i));
  for (int j = -m_top; j <= m_top; ++j) pd.neg_filtration.emplace(j, collect(2 * j));
  return pd;
}

bool open_orbit_member(const QMatrix& x, const ParabolicData& pd, int weight, const LieAlgebra&) {
  const SubspaceBasis* gw = pd.grading.space(weight);
  if (!gw) throw wrong_weight_error("no such weight space");
  if (!coordinates(*gw, x)) throw wrong_weight_error("element is not in the stated weight space");
  const SubspaceBasis& levi = pd.levi_basis;
  QMatrix tangent(gw->dim(), levi.dim());
  for (int k = 0; k < levi.dim(); ++k) {
    auto c = coordinates(*gw, bracket(levi.vectors[k], x));
    if (!c) throw error("internal: [g_0, g_w] left g_w");
    for (int i = 0; i < gw->dim(); ++i) tangent.at(i, k) = (*c)[i];
  }
  return rank_of(tangent) == gw->dim();
}

SliceSplitter make_slice_splitter(const LieAlgebra& g, const SlodowyData& sd) {
  SliceSplitter sp;
  sp.g = &g;
  sp.sd = &sd;
  const int top = 2 * sd.top_exponent();
  for (int d = 0; d <= top; d += 2) {
    SliceSplitter::Level lv;
    lv.d = d;
    const SubspaceBasis* gd = sd.grading.space(d);
    if (!gd) throw error("internal: missing even weight space in the grading");
    lv.gd = *gd;
    if (d == 0) {
      lv.v_vectors = sd.c_basis.vectors;
    } else if (d == 2) {
      // V_2 split as <e> + Vhat2 so the quadratic coefficient comes out first
      lv.v_vectors.push_back(sd.triple.e);
      for (const auto& v : sd.vhat2.vectors) lv.v_vectors.push_back(v);
    } else if (auto it = sd.hw_spaces.find(d / 2); it != sd.hw_spaces.end()) {
      lv.v_vectors = it->second.vectors;
    }
    if (const SubspaceBasis* up = sd.grading.space(d + 2)) lv.raise_vectors = up->vectors;

    const int cols = static_cast<int>(lv.v_vectors.size() + lv.raise_vectors.size());
    if (cols != gd->dim())
      throw error("internal: g_d does not split as V_d + ad_f(g_{d+2})");
    QMatrix c(gd->dim(), cols);
    int col = 0;
    for (const auto& v : lv.v_vectors) {
      auto vc = coordinates(*gd, v);
      if (!vc) throw error("internal: V_d vector outside g_d");
      for (int i = 0; i < gd->dim(); ++i) c.at(i, col) = (*vc)[i];
      ++col;
    }
    for (const auto& w : lv.raise_vectors) {
      auto wc = coordinates(*gd, bracket(sd.triple.f, w));
      if (!wc) throw error("internal: ad_f(g_{d+2}) outside g_d");
      for (int i = 0; i < gd->dim(); ++i) c.at(i, col) = (*wc)[i];
      ++col;
    }
    auto inv = inverse(c);
    if (!inv) throw error("internal: V_d + ad_f(g_{d+2}) is not a direct sum");
    lv.split_inverse = std::move(*inv);
    sp.levels.push_back(std::move(lv));
  }
  return sp;
}

namespace {

std::map<int, QMatrix> weight_components(const GradedDecomposition& gr, const LieAlgebra& g,
                                         const QMatrix& x) {
  return gr.decompose(g, x);
}
std::map<int, PMatrix> weight_components(const GradedDecomposition& gr, const LieAlgebra& g,
                                         const PMatrix& x) {
  return gr.decompose_poly(g, x);
}

std::optional<Vec> subspace_coords(const SubspaceBasis& s, const QMatrix& x) {
  return coordinates(s, x);
}
std::optional<std::vector<Polynomial>> subspace_coords(const SubspaceBasis& s, const PMatrix& x) {
  return coordinates_poly(s, x);
}

template <class T>
Matrix<T> lift(const QMatrix& m);
template <>
Matrix<Rational> lift<Rational>(const QMatrix& m) {
  return m;
}
template <>
Matrix<Polynomial> lift<Polynomial>(const QMatrix& m) {
  return promote(m);
}

// Multiply a constant matrix by a T-coordinate vector.
template <class T>
std::vector<T> apply_constant(const QMatrix& m, const std::vector<T>& v) {
  std::vector<T> out(m.rows(), T(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) out[i] += v[j] * T(m.at(i, j));
  return out;
}

template <class T>
Matrix<T> combine_vectors(const std::vector<QMatrix>& vecs, const std::vector<T>& coeffs, int n) {
  Matrix<T> m(n, n);
  for (size_t k = 0; k < vecs.size(); ++k) {
    const QMatrix& b = vecs[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (b.at(i, j) != 0) m.at(i, j) += coeffs[k] * T(b.at(i, j));
  }
  return m;
}

template <class T>
LynchParts<T> lynch_decompose_impl(const Matrix<T>& a, const SlodowyData& sd, const LieAlgebra& g,
                                   const SliceSplitter& sp, const Rational& base) {
  auto comps = weight_components(sd.grading, g, a);
  Matrix<T> f_scaled = lift<T>(sd.triple.f);
  f_scaled.scale(base);
  for (const auto& [w, m] : comps) {
    if (w < -2 && !m.is_zero()) throw not_in_slice_error("weight below -2 present");
    if (w == -2 && !(m == f_scaled)) throw not_in_slice_error("weight -2 part is not f");
  }
  if (comps.find(-2) == comps.end()) throw not_in_slice_error("weight -2 part is not f");

  const int n = g.n;
  Matrix<T> b = a;
  Matrix<T> u_total = Matrix<T>::identity(n);
  Matrix<T> v_total(n, n);
  for (const auto& lv : sp.levels) {
    auto bc = weight_components(sd.grading, g, b);
    auto it = bc.find(lv.d);
    const int nv = static_cast<int>(lv.v_vectors.size());
    if (it == bc.end()) continue;  // weight-d part already zero
    auto gd_coords = subspace_coords(lv.gd, it->second);
    if (!gd_coords) throw error("internal: weight component outside its weight space");
    std::vector<T> split = apply_constant(lv.split_inverse, *gd_coords);
    std::vector<T> vcoef(split.begin(), split.begin() + nv);
    std::vector<T> mu(split.begin() + nv, split.end());
    v_total += combine_vectors(lv.v_vectors, vcoef, n);
    if (lv.raise_vectors.empty()) continue;
    bool mu_zero = true;
    for (const auto& m : mu)
      if (!(m == T(0))) mu_zero = false;
    if (mu_zero) continue;
    // x with ad_{base f}(x) = -(image part): x = -(1/base) sum mu_i w_i
    Matrix<T> x = combine_vectors(lv.raise_vectors, mu, n);
    x.scale(Rational(-1) / base);
    Matrix<T> ex = nilpotent_exp(x);
    Matrix<T> ex_inv = nilpotent_exp(-x);
    b = multiply(ex_inv, multiply(b, ex));  // Ad(exp(-x))(b)
    u_total = multiply(u_total, ex);
  }

  if (!(b == f_scaled + v_total)) throw error("internal: slice sweep did not terminate on f + V");

  LynchParts<T> out;
  out.v = std::move(v_total);
  Matrix<T> log_u = nilpotent_log(u_total);
  auto xc = weight_components(sd.grading, g, log_u);
  for (auto& [w, m] : xc) {
    if (m.is_zero()) continue;
    if (w < 2) throw error("internal: unipotent log has nonpositive weights");
    out.x_parts.emplace(w, std::move(m));
  }
  return out;
}

template <class T>
Matrix<T> lynch_compose_impl(const std::map<int, Matrix<T>>& x_parts, const Matrix<T>& v,
                             const SlodowyData& sd) {
  const int n = v.rows();
  Matrix<T> x(n, n);
  for (const auto& [w, m] : x_parts) x += m;
  Matrix<T> u = nilpotent_exp(x);
  Matrix<T> u_inv = nilpotent_exp(-x);
  Matrix<T> fv = lift<T>(sd.triple.f) + v;
  return multiply(u, multiply(fv, u_inv));
}

}  // namespace

LynchParts<Rational> lynch_decompose(const QMatrix& a, const SlodowyData& sd, const LieAlgebra& g) {
  SliceSplitter sp = make_slice_splitter(g, sd);
  return lynch_decompose_impl<Rational>(a, sd, g, sp, Rational(1));
}

LynchParts<Polynomial> lynch_decompose(const PMatrix& a, const SlodowyData& sd, const LieAlgebra& g) {
  SliceSplitter sp = make_slice_splitter(g, sd);
  return lynch_decompose_impl<Polynomial>(a, sd, g, sp, Rational(1));
}

QMatrix lynch_compose(const std::map<int, QMatrix>& x_parts, const QMatrix& v, const SlodowyData& sd) {
  return lynch_compose_impl<Rational>(x_parts, v, sd);
}

PMatrix lynch_compose(const std::map<int, PMatrix>& x_parts, const PMatrix& v, const SlodowyData& sd) {
  return lynch_compose_impl<Polynomial>(x_parts, v, sd);
}

}  // namespace opslice
