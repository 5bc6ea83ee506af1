// Timing comparison of the OpenMP kernels against their serial references:
// dense products, minor-gcd enumeration, and the batch roundtrip runner.

#include <chrono>
#include <cstdio>

#include "opslice/minors.hpp"
#include "opslice/suites.hpp"

using namespace opslice;

namespace {

using clk = std::chrono::steady_clock;

double ms_since(clk::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(clk::now() - t0).count() / 1000.0;
}

QMatrix random_qmatrix(int n, TrialRng& rng) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rng.rational();
  return m;
}

PMatrix random_pmatrix(int n, int deg, TrialRng& rng) {
  PMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rng.polynomial(deg);
  return m;
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-34s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    TrialRng rng(7);
    QMatrix a = random_qmatrix(96, rng), b = random_qmatrix(96, rng);
    auto t0 = clk::now();
    QMatrix cs = multiply_serial(a, b);
    double s = ms_since(t0);
    t0 = clk::now();
    QMatrix cp = multiply(a, b);
    double p = ms_since(t0);
    if (!(cs == cp)) return 1;
    row("rational matmul 96x96", s, p);
  }
  {
    TrialRng rng(8);
    PMatrix a = random_pmatrix(24, 6, rng), b = random_pmatrix(24, 6, rng);
    auto t0 = clk::now();
    PMatrix cs = multiply_serial(a, b);
    double s = ms_since(t0);
    t0 = clk::now();
    PMatrix cp = multiply(a, b);
    double p = ms_since(t0);
    if (!(cs == cp)) return 1;
    row("polynomial matmul 24x24 deg 6", s, p);
  }
  {
    TrialRng rng(9);
    PMatrix m = random_pmatrix(8, 2, rng);
    // knock out constants so the gcd does not collapse instantly
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) m.at(i, j) = m.at(i, j) * Polynomial::z();
    auto t0 = clk::now();
    Polynomial gs = poly_matrix_minor_gcd_serial(m, 4);
    double s = ms_since(t0);
    t0 = clk::now();
    Polynomial gp = poly_matrix_minor_gcd(m, 4);
    double p = ms_since(t0);
    if (!(gs == gp)) return 1;
    row("minor gcd 8x8, order 4", s, p);
  }
  {
    ModelContext mc = make_model_context({ModelFamily::tube_sl, 2, 0});
    SuiteOptions opt;
    opt.trials = 24;
    opt.lambda = 1;
    opt.seed = 11;
    auto t0 = clk::now();
    SuiteResult rs = run_roundtrip_suite_serial(mc, opt);
    double s = ms_since(t0);
    t0 = clk::now();
    SuiteResult rp = run_roundtrip_suite(mc, opt);
    double p = ms_since(t0);
    if (!rs.ok() || !rp.ok() || rs.passed != rp.passed) return 1;
    row("roundtrip batch sl4 tube x24", s, p);
  }
  return 0;
}
