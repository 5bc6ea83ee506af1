#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opslice/minors.hpp"
#include "opslice/suites.hpp"

using namespace opslice;

// The OpenMP kernels against their serial references: identical exact output.

TEST_CASE("parallel rational product matches the serial reference") {
  TrialRng rng(100);
  for (int trial = 0; trial < 3; ++trial) {
    QMatrix a(40, 40), b(40, 40);
    for (int i = 0; i < 40; ++i)
      for (int j = 0; j < 40; ++j) {
        a.at(i, j) = rng.rational();
        b.at(i, j) = rng.rational();
      }
    CHECK(multiply(a, b) == multiply_serial(a, b));
  }
}

TEST_CASE("parallel polynomial product matches the serial reference") {
  TrialRng rng(101);
  PMatrix a(20, 20), b(20, 20);
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      a.at(i, j) = rng.polynomial(4);
      b.at(i, j) = rng.polynomial(4);
    }
  CHECK(multiply(a, b) == multiply_serial(a, b));
}

TEST_CASE("parallel minor gcd matches the serial reference") {
  TrialRng rng(102);
  for (int trial = 0; trial < 3; ++trial) {
    PMatrix m(6, 8);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 8; ++j) m.at(i, j) = rng.polynomial(2) * Polynomial::z();
    for (int r : {2, 4}) CHECK(poly_matrix_minor_gcd(m, r) == poly_matrix_minor_gcd_serial(m, r));
  }
  // a matrix of common factor z^2
  PMatrix d(3, 3);
  for (int i = 0; i < 3; ++i) d.at(i, i) = Polynomial::z() * Polynomial::z();
  CHECK(poly_matrix_minor_gcd(d, 2) == poly_matrix_minor_gcd_serial(d, 2));
}

TEST_CASE("parallel roundtrip batch matches the serial reference") {
  ModelContext mc = make_model_context({ModelFamily::tube_sl, 2, 0});
  SuiteOptions opt;
  opt.trials = 12;
  opt.seed = 7;
  opt.lambda = 1;
  SuiteResult par = run_roundtrip_suite(mc, opt);
  SuiteResult ser = run_roundtrip_suite_serial(mc, opt);
  CHECK(par.passed == ser.passed);
  CHECK(par.trials == ser.trials);
  CHECK(par.ok());
}
