#include "opslice/sl2.hpp"

#include <algorithm>

namespace opslice {

Json triple_to_json(const Sl2Triple& t) {
  Json j;
  j["f"] = to_json(t.f);
  j["h"] = to_json(t.h);
  j["e"] = to_json(t.e);
  return j;
}

Sl2Triple triple_from_json(const Json& j) {
  return {qmatrix_from_json(j.at("f")), qmatrix_from_json(j.at("h")), qmatrix_from_json(j.at("e"))};
}

bool validate_triple(const Sl2Triple& t) {
  QMatrix two_e = t.e;
  two_e.scale(Rational(2));
  QMatrix two_f = t.f;
  two_f.scale(Rational(2));
  return bracket(t.h, t.e) == two_e && bracket(t.h, t.f) == -two_f && bracket(t.e, t.f) == t.h;
}

namespace {

bool ad_nilpotent(const QMatrix& ad) {
  QMatrix p = ad;
  int covered = 1;
  while (covered < ad.rows()) {
    if (p.is_zero()) return true;
    p = p * p;
    covered *= 2;
  }
  return p.is_zero();
}

QMatrix from_coords(const LieAlgebra& g, const Vec& coords) {
  QMatrix m(g.n, g.n);
  for (int k = 0; k < g.dim(); ++k) {
    if (coords[k] == 0) continue;
    QMatrix t = g.basis[k];
    t.scale(coords[k]);
    m += t;
  }
  return m;
}

QMatrix stack(const QMatrix& a, const QMatrix& b) {
  QMatrix s(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) s.at(a.rows() + i, j) = b.at(i, j);
  return s;
}

// Solve the pair [e,f] = h, [h,f] = -2f for f.
QMatrix solve_for_f(const LieAlgebra& g, const QMatrix& ad_e, const QMatrix& ad_h,
                    const QMatrix& h) {
  const int d = g.dim();
  QMatrix shifted = ad_h;
  for (int i = 0; i < d; ++i) shifted.at(i, i) += 2;
  QMatrix sys = stack(ad_e, shifted);
  auto hc = coordinates(g, h);
  if (!hc) throw not_in_algebra_error("h left the algebra");
  Vec rhs(2 * d, Rational(0));
  for (int i = 0; i < d; ++i) rhs[i] = (*hc)[i];
  auto sol = solve_linear(sys, rhs);
  if (!sol) throw error("no f completes the triple; e is not the right kind of nilpotent");
  return from_coords(g, sol->particular);
}

}  // namespace

Sl2Triple jm_complete(const QMatrix& e, const LieAlgebra& g) {
  if (e.is_zero()) throw zero_element_error("cannot complete the zero element");
  auto ec = coordinates(g, e);
  if (!ec) throw not_in_algebra_error("e outside the algebra");
  QMatrix ad_e = adjoint_operator(e, g);
  if (!ad_nilpotent(ad_e)) throw not_nilpotent_error("ad_e is not nilpotent");

  // [[e,u],e] = 2e is linear: -ad_e^2(u) = 2e. Then h = [e,u] lies in im(ad_e).
  QMatrix a = ad_e * ad_e;
  a.scale(Rational(-1));
  Vec rhs(*ec);
  for (auto& v : rhs) v *= 2;
  auto usol = solve_linear(a, rhs);
  if (!usol) throw error("no triple through e; the ambient algebra is not semisimple");
  QMatrix u = from_coords(g, usol->particular);
  QMatrix h = bracket(e, u);

  QMatrix ad_h = adjoint_operator(h, g);
  QMatrix f = solve_for_f(g, ad_e, ad_h, h);
  Sl2Triple t{f, h, e};
  if (!validate_triple(t)) throw error("internal: completed triple fails the bracket relations");
  return t;
}

std::map<int, QMatrix> GradedDecomposition::decompose(const LieAlgebra& g, const QMatrix& x) const {
  auto xc = coordinates(g, x);
  if (!xc) throw not_in_algebra_error("element outside the algebra");
  QMatrix col(g.dim(), 1);
  for (int i = 0; i < g.dim(); ++i) col.at(i, 0) = (*xc)[i];
  QMatrix graded = cob_inverse * col;
  std::map<int, QMatrix> out;
  int idx = 0;
  for (int w : weights) {
    const SubspaceBasis& s = spaces.at(w);
    QMatrix comp(g.n, g.n);
    bool nonzero = false;
    for (int k = 0; k < s.dim(); ++k, ++idx) {
      if (graded.at(idx, 0) == 0) continue;
      nonzero = true;
      QMatrix t = s.vectors[k];
      t.scale(graded.at(idx, 0));
      comp += t;
    }
    if (nonzero) out[w] = std::move(comp);
  }
  return out;
}

std::map<int, PMatrix> GradedDecomposition::decompose_poly(const LieAlgebra& g, const PMatrix& x) const {
  const int deg = max_z_degree(x);
  std::map<int, PMatrix> out;
  for (int d = 0; d <= deg; ++d) {
    auto comps = decompose(g, z_coefficient(x, d));
    for (auto& [w, m] : comps) {
      auto it = out.find(w);
      if (it == out.end()) it = out.emplace(w, PMatrix(g.n, g.n)).first;
      Vec zd(d + 1, Rational(0));
      zd[d] = 1;
      axpy(it->second, Polynomial(std::move(zd)), m);
    }
  }
  return out;
}

GradedDecomposition ad_h_grading(const Sl2Triple& t, const LieAlgebra& g) {
  QMatrix ad_h = adjoint_operator(t.h, g);
  const int d = g.dim();
  GradedDecomposition gr;
  int total = 0;
  std::map<int, std::vector<Vec>> coord_spaces;
  // Scan outward from 0; a valid integral grading is exhausted well inside
  // |j| <= dim g.
  for (int a = 0; a <= d && total < d; ++a) {
    for (int sgn : {1, -1}) {
      if (a == 0 && sgn < 0) continue;
      const int j = a * sgn;
      QMatrix shifted = ad_h;
      for (int i = 0; i < d; ++i) shifted.at(i, i) -= j;
      auto kb = kernel_basis(shifted);
      if (kb.empty()) continue;
      total += static_cast<int>(kb.size());
      coord_spaces[j] = std::move(kb);
    }
  }
  if (total != d) throw non_integral_weights_error("ad_h spectrum is not integral");

  std::vector<Vec> cob_cols;
  for (auto& [w, vecs] : coord_spaces) {
    gr.weights.push_back(w);
    std::vector<QMatrix> mats;
    for (auto& v : vecs) {
      mats.push_back(from_coords(g, v));
      gr.column_weight.push_back(w);
      cob_cols.push_back(v);
    }
    gr.spaces.emplace(w, make_subspace(g, std::move(mats)));
  }
  auto inv = inverse(columns_from(cob_cols));
  if (!inv) throw error("internal: graded basis is singular");
  gr.cob_inverse = std::move(*inv);
  return gr;
}

bool is_even(const GradedDecomposition& gr) {
  for (int w : gr.weights)
    if (w % 2 != 0) return false;
  return true;
}

bool is_even(const Sl2Triple& t, const LieAlgebra& g) { return is_even(ad_h_grading(t, g)); }

ModuleMultiplicities module_multiplicities(const Sl2Triple& t, const LieAlgebra& g) {
  return module_multiplicities(t, g, ad_h_grading(t, g));
}

ModuleMultiplicities module_multiplicities(const Sl2Triple& t, const LieAlgebra& g,
                                           const GradedDecomposition& gr) {
  QMatrix ad_e = adjoint_operator(t.e, g);
  ModuleMultiplicities mm;
  mm.entries[0] = 0;
  for (int w : gr.weights) {
    if (w < 0) continue;
    const SubspaceBasis& s = gr.spaces.at(w);
    // ker(ad_e) meets g_w in the kernel of ad_e restricted to g_w.
    QMatrix restricted(g.dim(), s.dim());
    for (int k = 0; k < s.dim(); ++k) {
      auto c = coordinates(g, bracket(t.e, s.vectors[k]));
      if (!c) throw not_in_algebra_error("bracket left the algebra");
      for (int i = 0; i < g.dim(); ++i) restricted.at(i, k) = (*c)[i];
    }
    const int nw = static_cast<int>(kernel_basis(restricted).size());
    if (nw > 0 || w == 0) mm.entries[w] = nw;
  }
  return mm;
}

Sl2Triple principal_triple(const LieAlgebra& g) {
  const int n = g.n;
  if (g.family == Family::sl) {
    QMatrix f(n, n), h(n, n), e(n, n);
    for (int i = 0; i + 1 < n; ++i) {
      f.at(i + 1, i) = 1;
      e.at(i, i + 1) = Rational(static_cast<long>(i + 1) * (n - i - 1));
    }
    for (int i = 0; i < n; ++i) h.at(i, i) = n - 1 - 2 * i;
    Sl2Triple t{f, h, e};
    if (!validate_triple(t)) throw error("internal: principal sl triple failed validation");
    return t;
  }
  if (g.family == Family::so || g.family == Family::sp) {
    QMatrix h(n, n);
    if (g.family == Family::sp) {
      // h = diag(n-1, n-3, ..., 1, -1, ..., 1-n)
      for (int i = 0; i < n; ++i) h.at(i, i) = n - 1 - 2 * i;
    } else if (n % 2 == 1) {
      // h = diag(n-1, n-3, ..., 2, 0, -2, ..., 1-n)
      for (int i = 0; i < n; ++i) h.at(i, i) = n - 1 - 2 * i;
    } else {
      // partition [n-1, 1]: eigenvalues n-2, n-4, ..., 0, 0, ..., 2-n
      int k = n / 2;
      for (int i = 0; i < k; ++i) {
        h.at(i, i) = n - 2 - 2 * i;
        h.at(n - 1 - i, n - 1 - i) = -(n - 2 - 2 * i);
      }
    }
    return complete_even_triple_from_h(g, h);
  }
  throw unsupported_family_error("principal triple needs sl, so or sp");
}

Sl2Triple complete_even_triple_from_h(const LieAlgebra& g, const QMatrix& h) {
  QMatrix ad_h = adjoint_operator(h, g);
  const int d = g.dim();
  QMatrix shifted = ad_h;
  for (int i = 0; i < d; ++i) shifted.at(i, i) -= 2;
  auto g2 = kernel_basis(shifted);
  if (g2.empty()) throw error("grading element has no weight-2 space");
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vec coeffs(d, Rational(0));
    for (size_t k = 0; k < g2.size(); ++k) {
      const Rational c = attempt == 0 ? Rational(1) : Rational(static_cast<long>(k + 1 + attempt));
      for (int i = 0; i < d; ++i) coeffs[i] += c * g2[k][i];
    }
    QMatrix e = from_coords(g, coeffs);
    QMatrix ad_e = adjoint_operator(e, g);
    try {
      QMatrix f = solve_for_f(g, ad_e, ad_h, h);
      Sl2Triple t{f, h, e};
      if (validate_triple(t)) return t;
    } catch (const error&) {
      // fall through to the next deterministic coefficient choice
    }
  }
  throw error("could not complete the grading element to a triple");
}

QMatrix partition_nilpotent(const std::vector<int>& partition, const LieAlgebra& g) {
  if (g.family != Family::sl) throw unsupported_family_error("partition nilpotents live in sl_n");
  int sum = 0;
  for (int p : partition) {
    if (p <= 0) throw bad_partition_error("parts must be positive");
    sum += p;
  }
  if (sum != g.n) throw bad_partition_error("partition does not sum to n");
  QMatrix m(g.n, g.n);
  int off = 0;
  for (int p : partition) {
    for (int i = 0; i + 1 < p; ++i) m.at(off + i, off + i + 1) = 1;
    off += p;
  }
  return m;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // descending parts
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace opslice
