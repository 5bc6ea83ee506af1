#include "opslice/polynomial.hpp"

#include <sstream>

namespace opslice {

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  Vec out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Rational& s) {
  if (s == 0) return Polynomial();
  Polynomial r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

Polynomial Polynomial::operator/(const Rational& s) const {
  if (s == 0) throw error("polynomial division by zero scalar");
  Polynomial r = *this;
  for (auto& c : r.c_) c /= s;
  return r;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  Vec out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(out));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw error("polynomial division by zero");
  Vec rem = a.c_;
  int db = b.degree();
  const Rational lb = b.leading();
  Vec quot;
  int dr = static_cast<int>(rem.size()) - 1;
  if (dr >= db) quot.assign(dr - db + 1, Rational(0));
  while (dr >= db) {
    if (rem[dr] != 0) {
      Rational q = rem[dr] / lb;
      quot[dr - db] = q;
      for (int i = 0; i <= db; ++i) rem[dr - db + i] -= q * b.c_[i];
    }
    --dr;
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::div_exact(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw error("inexact polynomial division");
  return q;
}

Polynomial Polynomial::monic_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
    if (!b.is_zero()) b = b / b.leading();  // keep remainders monic; controls growth
  }
  if (a.is_zero()) return a;
  return a / a.leading();
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i].get_str();
    } else {
      if (c_[i] != 1) os << c_[i].get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace opslice
