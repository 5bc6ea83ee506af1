#pragma once

#include <utility>

#include "opslice/rational.hpp"

namespace opslice {

// Univariate polynomial over Q in the chart coordinate z. Dense coefficient
// list, index = degree; trailing coefficient nonzero unless the polynomial is
// zero (empty list).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT: implicit constant promotion is intended
    if (c != 0) c_.push_back(c);
  }
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT
  explicit Polynomial(Vec coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial z() { return Polynomial(Vec{0, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Vec& coeffs() const { return c_; }

  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
  }
  Rational constant_term() const { return coeff(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& s);
  friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }
  Polynomial operator/(const Rational& s) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial derivative() const;
  Rational eval(const Rational& x) const;

  // Quotient and remainder over Q; b must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  // Exact quotient; throws if the remainder is nonzero.
  static Polynomial div_exact(const Polynomial& a, const Polynomial& b);
  // Monic gcd (zero if both are zero).
  static Polynomial monic_gcd(Polynomial a, Polynomial b);

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  Vec c_;
};

}  // namespace opslice
