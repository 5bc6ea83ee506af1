#include "opslice/lie_algebra.hpp"

namespace opslice {

std::string family_name(Family f) {
  switch (f) {
    case Family::sl: return "sl";
    case Family::so: return "so";
    case Family::sp: return "sp";
    case Family::custom: return "custom";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "sl") return Family::sl;
  if (s == "so") return Family::so;
  if (s == "sp") return Family::sp;
  if (s == "custom") return Family::custom;
  throw unsupported_family_error("unknown family: " + s);
}

Vec flatten(const QMatrix& m) {
  Vec v(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v[static_cast<size_t>(i) * m.cols() + j] = m.at(i, j);
  return v;
}

QMatrix unflatten(const Vec& v, int rows, int cols) {
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = v[static_cast<size_t>(i) * cols + j];
  return m;
}

void LieAlgebra::finalize() {
  std::vector<Vec> cols;
  cols.reserve(basis.size());
  for (const auto& b : basis) cols.push_back(flatten(b));
  basis_columns_ = columns_from(cols);
  if (basis_columns_.rows() == 0) basis_columns_ = QMatrix(n * n, 0);
}

namespace {

// Solution space of x^T J + J x = 0 as a matrix algebra basis.
std::vector<QMatrix> form_condition_kernel(int n, const QMatrix& j) {
  // Operator on flattened matrices: row index = flattened output entry.
  QMatrix op(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // (x^T J)_{ab} = sum_w x_{wa} J_{wb};  (J x)_{ab} = sum_w J_{aw} x_{wb}
      for (int w = 0; w < n; ++w) {
        op.at(a * n + b, w * n + a) += j.at(w, b);
        op.at(a * n + b, w * n + b) += j.at(a, w);
      }
    }
  std::vector<QMatrix> basis;
  for (const auto& v : kernel_basis(op)) basis.push_back(unflatten(v, n, n));
  return basis;
}

}  // namespace

LieAlgebra construct_classical(Family family, int n) {
  if (n < 2) throw unsupported_family_error("matrix size must be at least 2");
  LieAlgebra g;
  g.family = family;
  g.n = n;
  switch (family) {
    case Family::sl: {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          QMatrix e(n, n);
          e.at(i, j) = 1;
          g.basis.push_back(std::move(e));
        }
      for (int i = 0; i + 1 < n; ++i) {
        QMatrix h(n, n);
        h.at(i, i) = 1;
        h.at(i + 1, i + 1) = -1;
        g.basis.push_back(std::move(h));
      }
      break;
    }
    case Family::so: {
      QMatrix j(n, n);
      for (int i = 0; i < n; ++i) j.at(i, n - 1 - i) = 1;
      g.form = j;
      g.basis = form_condition_kernel(n, j);
      break;
    }
    case Family::sp: {
      if (n % 2 != 0) throw unsupported_family_error("sp needs even matrix size");
      QMatrix j(n, n);
      for (int i = 0; i < n; ++i) j.at(i, n - 1 - i) = (i < n / 2) ? 1 : -1;
      g.form = j;
      g.basis = form_condition_kernel(n, j);
      break;
    }
    case Family::custom:
      throw unsupported_family_error("use construct_custom for custom algebras");
  }
  g.finalize();
  return g;
}

LieAlgebra construct_orthogonal(int n, QMatrix j) {
  if (j.rows() != n || j.cols() != n) throw error("form size mismatch");
  if (j != j.transpose()) throw error("orthogonal form must be symmetric");
  if (!inverse(j)) throw error("orthogonal form must be invertible");
  LieAlgebra g;
  g.family = Family::so;
  g.n = n;
  g.form = j;
  g.basis = form_condition_kernel(n, std::move(j));
  g.finalize();
  return g;
}

LieAlgebra construct_custom(std::vector<QMatrix> basis, std::optional<QMatrix> j) {
  if (basis.empty()) throw error("custom algebra needs a nonempty basis");
  LieAlgebra g;
  g.family = Family::custom;
  g.n = basis[0].rows();
  g.basis = std::move(basis);
  g.form = std::move(j);
  g.finalize();
  if (rank_of(g.basis_columns()) != g.dim()) throw error("custom basis is linearly dependent");
  if (!closed_under_bracket(g)) throw error("custom basis is not closed under bracket");
  return g;
}

Json algebra_to_json(const LieAlgebra& g) {
  Json j;
  j["family"] = family_name(g.family);
  j["n"] = g.n;
  const bool formless_family = g.family == Family::sl || g.family == Family::custom;
  if (g.form && !formless_family) {
    // Emit J only when it differs from the antidiagonal default.
    QMatrix std_j(g.n, g.n);
    for (int i = 0; i < g.n; ++i)
      std_j.at(i, g.n - 1 - i) = (g.family == Family::sp && i >= g.n / 2) ? -1 : 1;
    if (*g.form != std_j) j["J"] = to_json(*g.form);
  } else if (g.form) {
    j["J"] = to_json(*g.form);
  }
  if (g.family == Family::custom) {
    Json basis = Json::array();
    for (const auto& b : g.basis) basis.push_back(to_json(b));
    j["basis"] = std::move(basis);
  }
  return j;
}

LieAlgebra algebra_from_json(const Json& j) {
  Family fam = family_from_name(j.at("family").get<std::string>());
  const int n = j.at("n").get<int>();
  if (fam == Family::custom) {
    std::vector<QMatrix> basis;
    for (const auto& b : j.at("basis")) basis.push_back(qmatrix_from_json(b));
    std::optional<QMatrix> form;
    if (j.contains("J")) form = qmatrix_from_json(j.at("J"));
    return construct_custom(std::move(basis), std::move(form));
  }
  if (fam == Family::so && j.contains("J")) return construct_orthogonal(n, qmatrix_from_json(j.at("J")));
  return construct_classical(fam, n);
}

std::optional<Vec> coordinates(const LieAlgebra& g, const QMatrix& x) {
  QMatrix rhs(g.n * g.n, 1);
  Vec fx = flatten(x);
  for (size_t i = 0; i < fx.size(); ++i) rhs.at(static_cast<int>(i), 0) = fx[i];
  auto sol = solve_many(g.basis_columns(), rhs);
  if (!sol) return std::nullopt;
  Vec out(g.dim());
  for (int i = 0; i < g.dim(); ++i) out[i] = sol->at(i, 0);
  return out;
}

bool contains(const LieAlgebra& g, const QMatrix& x) { return coordinates(g, x).has_value(); }

QMatrix adjoint_operator(const QMatrix& x, const LieAlgebra& g) {
  if (!contains(g, x)) throw not_in_algebra_error("element outside the algebra");
  QMatrix rhs(g.n * g.n, g.dim());
  for (int k = 0; k < g.dim(); ++k) {
    Vec col = flatten(bracket(x, g.basis[k]));
    for (size_t i = 0; i < col.size(); ++i) rhs.at(static_cast<int>(i), k) = col[i];
  }
  auto sol = solve_many(g.basis_columns(), rhs);
  if (!sol) throw not_in_algebra_error("bracket left the algebra; basis not closed");
  return *sol;
}

Rational killing_form(const QMatrix& x, const QMatrix& y, const LieAlgebra& g) {
  QMatrix adx = adjoint_operator(x, g);
  QMatrix ady = adjoint_operator(y, g);
  Rational t(0);
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) t += adx.at(i, j) * ady.at(j, i);
  return t;
}

bool preserves_form(const QMatrix& x, const QMatrix& j) {
  return (x.transpose() * j + j * x).is_zero();
}

bool preserves_form(const PMatrix& x, const QMatrix& j) {
  PMatrix pj = promote(j);
  return (x.transpose() * pj + pj * x).is_zero();
}

bool closed_under_bracket(const LieAlgebra& g) {
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j)
      if (!contains(g, bracket(g.basis[i], g.basis[j]))) return false;
  return true;
}

SubspaceBasis make_subspace(const LieAlgebra& g, std::vector<QMatrix> vectors) {
  SubspaceBasis s;
  s.ambient = &g;
  s.vectors = std::move(vectors);
  std::vector<Vec> cols;
  cols.reserve(s.vectors.size());
  for (const auto& v : s.vectors) cols.push_back(flatten(v));
  s.flat = columns_from(cols);
  if (s.flat.rows() == 0) s.flat = QMatrix(g.n * g.n, 0);
  return s;
}

std::optional<Vec> coordinates(const SubspaceBasis& s, const QMatrix& x) {
  if (s.dim() == 0) return x.is_zero() ? std::optional<Vec>(Vec{}) : std::nullopt;
  QMatrix rhs(s.flat.rows(), 1);
  Vec fx = flatten(x);
  for (size_t i = 0; i < fx.size(); ++i) rhs.at(static_cast<int>(i), 0) = fx[i];
  auto sol = solve_many(s.flat, rhs);
  if (!sol) return std::nullopt;
  Vec out(s.dim());
  for (int i = 0; i < s.dim(); ++i) out[i] = sol->at(i, 0);
  return out;
}

std::optional<std::vector<Polynomial>> coordinates_poly(const SubspaceBasis& s, const PMatrix& x) {
  if (s.dim() == 0) return x.is_zero() ? std::optional<std::vector<Polynomial>>(std::vector<Polynomial>{}) : std::nullopt;
  PMatrix rhs(s.flat.rows(), 1);
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) rhs.at(i * x.cols() + j, 0) = x.at(i, j);
  auto sol = solve_many_poly(s.flat, rhs);
  if (!sol) return std::nullopt;
  std::vector<Polynomial> out(s.dim());
  for (int i = 0; i < s.dim(); ++i) out[i] = sol->at(i, 0);
  return out;
}

QMatrix combine(const SubspaceBasis& s, const Vec& coords) {
  const LieAlgebra& g = *s.ambient;
  QMatrix m(g.n, g.n);
  for (int k = 0; k < s.dim(); ++k) {
    if (coords[k] == 0) continue;
    QMatrix t = s.vectors[k];
    t.scale(coords[k]);
    m += t;
  }
  return m;
}

PMatrix combine_poly(const SubspaceBasis& s, const std::vector<Polynomial>& coords) {
  const LieAlgebra& g = *s.ambient;
  PMatrix m(g.n, g.n);
  for (int k = 0; k < s.dim(); ++k) axpy(m, coords[k], s.vectors[k]);
  return m;
}

}  // namespace opslice
