#include "opslice/suites.hpp"

#include <sstream>

namespace opslice {

SlodowyCoefficients random_coefficients(const SlodowyData& sd, const Rational& lambda, TrialRng& rng,
                                        int degree_cap) {
  SlodowyCoefficients c;
  c.lambda = lambda;
  for (int i = 0; i < sd.c_basis.dim(); ++i) c.psi0.push_back(rng.polynomial(degree_cap));
  c.q = rng.polynomial(degree_cap);
  for (int m : sd.exponents) {
    const int d = (m == 1) ? sd.vhat2.dim() : sd.hw_spaces.at(m).dim();
    std::vector<Polynomial> coords;
    for (int i = 0; i < d; ++i) coords.push_back(rng.polynomial(degree_cap));
    c.psihat[m] = std::move(coords);
  }
  return c;
}

PMatrix random_unipotent_direction(const ParabolicData& pd, TrialRng& rng, int degree_cap) {
  const SubspaceBasis& u1 = pd.u_filtration.at(0);
  const LieAlgebra& g = *u1.ambient;
  PMatrix x(g.n, g.n);
  for (const auto& v : u1.vectors) axpy(x, rng.polynomial(degree_cap), v);
  return x;
}

namespace {

uint64_t trial_seed(uint64_t seed, int trial) {
  SplitMix64 s(seed + 0x1000u * static_cast<uint64_t>(trial) + 1u);
  return s.next();
}

template <class Fn>
SuiteResult run_trials(int trials, bool parallel, Fn&& one) {
  SuiteResult res;
  res.trials = trials;
  std::vector<std::string> errors(trials);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int t = 0; t < trials; ++t) {
    try {
      one(t);
    } catch (const std::exception& ex) {
      errors[t] = ex.what();
      if (errors[t].empty()) errors[t] = "failed";
    }
  }
  for (int t = 0; t < trials; ++t) {
    if (errors[t].empty())
      ++res.passed;
    else
      res.failures.push_back({t, errors[t]});
  }
  return res;
}

struct check_failed : error {
  using error::error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw check_failed(what);
}

void roundtrip_one(const ModelContext& mc, const SuiteOptions& opt, int trial) {
  TrialRng rng(trial_seed(opt.seed, trial));
  const LieAlgebra& g = *mc.algebra;
  SlodowyCoefficients coeffs = random_coefficients(mc.sd, opt.lambda, rng, opt.degree_cap);
  LambdaConnection conn = slodowy_functor(mc.sd, coeffs, g);
  require(is_oper(conn, mc.pd), "functor output fails the oper position test");

  PMatrix x = random_unipotent_direction(mc.pd, rng, opt.degree_cap);
  GaugePoly gauge = GaugePoly::unipotent(x);
  LambdaConnection moved = gauge_transform(conn, gauge);
  if (g.form) require(preserves_form(moved.A, *g.form), "gauge output breaks the bilinear form");

  NormalizeResult nr = normalize(moved, mc.sd, mc.pd);
  require(nr.coeffs == coeffs, "normal-form coefficients differ from the built ones");

  // exp(x) followed by the returned gauge must act trivially
  PMatrix total = multiply(gauge.realize(), nr.gauge.realize());
  require(total == promote(QMatrix::identity(g.n)), "residual gauge is not the identity");
}

void lynch_one(const ModelContext& mc, const SuiteOptions& opt, int trial) {
  TrialRng rng(trial_seed(opt.seed, trial));
  const LieAlgebra& g = *mc.algebra;
  // random (u, v): v in V, x in positive even weights
  QMatrix v(g.n, g.n);
  for (const auto& vec : mc.sd.c_basis.vectors) {
    QMatrix t = vec;
    t.scale(rng.rational());
    v += t;
  }
  for (int m : mc.sd.exponents)
    for (const auto& vec : mc.sd.hw_spaces.at(m).vectors) {
      QMatrix t = vec;
      t.scale(rng.rational());
      v += t;
    }
  std::map<int, QMatrix> x_parts;
  for (int w : mc.sd.grading.weights) {
    if (w <= 0) continue;
    QMatrix xw(g.n, g.n);
    bool nonzero = false;
    for (const auto& vec : mc.sd.grading.spaces.at(w).vectors) {
      Rational c = rng.rational();
      if (c == 0) continue;
      QMatrix t = vec;
      t.scale(c);
      xw += t;
      nonzero = true;
    }
    if (nonzero) x_parts.emplace(w, std::move(xw));
  }
  QMatrix a = lynch_compose(x_parts, v, mc.sd);
  LynchParts<Rational> parts = lynch_decompose(a, mc.sd, g);
  require(parts.v == v, "slice part differs");
  std::map<int, QMatrix> expect = x_parts;
  require(parts.x_parts == expect, "unipotent part differs");
  if (g.form) {
    require(preserves_form(a, *g.form), "composed slice element breaks the bilinear form");
  }
}

void cstar_one(const ModelContext& mc, const SuiteOptions& opt, int trial) {
  TrialRng rng(trial_seed(opt.seed, trial));
  const LieAlgebra& g = *mc.algebra;
  SlodowyCoefficients coeffs = random_coefficients(mc.sd, opt.lambda, rng, opt.degree_cap);
  LambdaConnection conn = slodowy_functor(mc.sd, coeffs, g);
  PMatrix x = random_unipotent_direction(mc.pd, rng, opt.degree_cap);
  LambdaConnection moved = gauge_transform(conn, GaugePoly::unipotent(x));

  Rational xi(0);
  while (xi == 0) xi = rng.rational();
  LambdaConnection scaled = cstar_act(xi, moved);
  NormalizeResult a = normalize(scaled, mc.sd, mc.pd);
  NormalizeResult b = normalize(moved, mc.sd, mc.pd);
  require(a.coeffs == cstar_act_coeffs(xi, b.coeffs), "coefficient extraction is not equivariant");
}

}  // namespace

SuiteResult run_roundtrip_suite(const ModelContext& mc, const SuiteOptions& opt) {
  return run_trials(opt.trials, opt.parallel, [&](int t) { roundtrip_one(mc, opt, t); });
}

SuiteResult run_roundtrip_suite_serial(const ModelContext& mc, const SuiteOptions& opt) {
  return run_trials(opt.trials, false, [&](int t) { roundtrip_one(mc, opt, t); });
}

SuiteResult run_lynch_suite(const ModelContext& mc, const SuiteOptions& opt) {
  return run_trials(opt.trials, opt.parallel, [&](int t) { lynch_one(mc, opt, t); });
}

SuiteResult run_cstar_suite(const ModelContext& mc, const SuiteOptions& opt) {
  return run_trials(opt.trials, opt.parallel, [&](int t) { cstar_one(mc, opt, t); });
}

TableResult run_table_check(const ModelDescriptor& desc) {
  TableResult tr;
  tr.desc = desc;
  ModelContext mc = make_model_context(desc);
  tr.computed = module_multiplicities(mc.triple, *mc.algebra, mc.sd.grading);
  tr.expected = expected_multiplicities(desc);
  tr.centralizer_dim = mc.sd.c_basis.dim();
  return tr;
}

}  // namespace opslice
