#pragma once

#include <json.hpp>

#include "opslice/matrix.hpp"

namespace opslice {

using Json = nlohmann::json;

// Rationals as strings "p/q" ("p" when q = 1); polynomials as arrays of
// rational strings, index = degree; matrices row-major nested.

inline Json to_json(const Rational& q) { return rational_to_string(q); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw parse_error("expected a rational string");
  return rational_from_string(j.get<std::string>());
}

inline Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_to_string(c));
  return a;
}

inline Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw parse_error("expected a polynomial coefficient array");
  Vec cs;
  for (const auto& c : j) cs.push_back(rational_from_json(c));
  return Polynomial(std::move(cs));
}

inline Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const PMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline QMatrix qmatrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw parse_error("expected a nonempty matrix array");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) throw parse_error("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.at(i, c) = rational_from_json(j[i][c]);
  }
  return m;
}

inline PMatrix pmatrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw parse_error("expected a nonempty matrix array");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  PMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) throw parse_error("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.at(i, c) = polynomial_from_json(j[i][c]);
  }
  return m;
}

}  // namespace opslice
