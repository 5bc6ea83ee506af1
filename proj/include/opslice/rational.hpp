#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace opslice {

// Exact rational scalar. mpq_class keeps denominators positive and fractions
// reduced after every operation, and get_str() emits "p/q" (or "p" when q=1),
// which is the wire format used throughout.
using Rational = mpq_class;
using Vec = std::vector<Rational>;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : error {
  using error::error;
};

inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw parse_error("bad rational literal: " + s);
  if (q.get_den() == 0) throw parse_error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace opslice
