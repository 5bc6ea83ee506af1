#pragma once

#include "opslice/matrix.hpp"

namespace opslice {

// Determinant of a square polynomial matrix, Bareiss fraction-free two-step
// elimination over Q[z] (divisions are exact in the integral domain).
Polynomial poly_det(const PMatrix& m);

// Monic gcd over all r x r minors of m; zero when every minor vanishes
// identically, and a nonzero constant comes out as 1. The serial variant is
// the reference for the OpenMP kernel.
Polynomial poly_matrix_minor_gcd(const PMatrix& m, int r);
Polynomial poly_matrix_minor_gcd_serial(const PMatrix& m, int r);

}  // namespace opslice
