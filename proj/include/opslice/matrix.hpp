#pragma once

#include <vector>

#include "opslice/polynomial.hpp"
#include "opslice/rational.hpp"

namespace opslice {

struct not_nilpotent_error : error {
  using error::error;
};

// Dense row-major matrix over an exact scalar (Rational or Polynomial).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  T& operator()(int i, int j) { return at(i, j); }
  const T& operator()(int i, int j) const { return at(i, j); }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!(v == T(0))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  T trace() const {
    T t(0);
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& v : m.a_) v = -v;
    return m;
  }

  template <class S>
  Matrix& scale(const S& s) {
    for (auto& v : a_) v = v * s;
    return *this;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using PMatrix = Matrix<Polynomial>;

// Reference product, kept serial for testing against the OpenMP kernel.
template <class T>
Matrix<T> multiply_serial(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw error("matrix product shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T& aik = a.at(i, k);
      if (aik == T(0)) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

// Production product; rows are independent so the loop parallelizes directly.
template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw error("matrix product shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  const int m = a.rows();
#pragma omp parallel for schedule(dynamic) if (m >= 16)
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T& aik = a.at(i, k);
      if (aik == T(0)) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  return multiply(a, b);
}

template <class T, class S>
Matrix<T> operator*(const Matrix<T>& m, const S& s) {
  Matrix<T> r = m;
  r.scale(s);
  return r;
}

inline PMatrix promote(const QMatrix& m) {
  PMatrix p(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) p.at(i, j) = Polynomial(m.at(i, j));
  return p;
}

inline PMatrix derivative(const PMatrix& m) {
  PMatrix d(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) d.at(i, j) = m.at(i, j).derivative();
  return d;
}

// acc += s * m  for a polynomial coefficient on a constant direction.
inline void axpy(PMatrix& acc, const Polynomial& s, const QMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) acc.at(i, j) += s * Polynomial(m.at(i, j));
}

inline int max_z_degree(const PMatrix& m) {
  int d = -1;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) d = std::max(d, m.at(i, j).degree());
  return d;
}

// Coefficient matrix of z^k.
inline QMatrix z_coefficient(const PMatrix& m, int k) {
  QMatrix c(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) c.at(i, j) = m.at(i, j).coeff(k);
  return c;
}

// exp of a nilpotent matrix: sum_{i<k} N^i / i!; exact, with polynomial
// inverse nilpotent_exp(-N). Throws when N^size != 0.
template <class T>
Matrix<T> nilpotent_exp(const Matrix<T>& n) {
  if (!n.is_square()) throw error("nilpotent_exp needs a square matrix");
  const int sz = n.rows();
  Matrix<T> sum = Matrix<T>::identity(sz);
  Matrix<T> power = Matrix<T>::identity(sz);
  Rational fact(1);
  for (int k = 1; k <= sz; ++k) {
    power = multiply(power, n);
    if (power.is_zero()) return sum;
    fact *= k;
    Matrix<T> term = power;
    term.scale(Rational(1) / fact);
    sum += term;
  }
  throw not_nilpotent_error("matrix is not nilpotent");
}

// log of a unipotent matrix: sum (-1)^{k+1} (U-I)^k / k; exact and finite.
template <class T>
Matrix<T> nilpotent_log(const Matrix<T>& u) {
  if (!u.is_square()) throw error("nilpotent_log needs a square matrix");
  const int sz = u.rows();
  Matrix<T> n = u - Matrix<T>::identity(sz);
  Matrix<T> sum(sz, sz);
  Matrix<T> power = Matrix<T>::identity(sz);
  for (int k = 1; k <= sz; ++k) {
    power = multiply(power, n);
    if (power.is_zero()) return sum;
    Matrix<T> term = power;
    term.scale(Rational(k % 2 == 1 ? 1 : -1) / Rational(k));
    sum += term;
  }
  throw not_nilpotent_error("matrix is not unipotent");
}

}  // namespace opslice
