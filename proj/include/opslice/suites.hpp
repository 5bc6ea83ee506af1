#pragma once

#include <cstdint>

#include "opslice/models.hpp"

namespace opslice {

// Deterministic across platforms; std::uniform_int_distribution is not.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

struct TrialRng {
  SplitMix64 sm;
  explicit TrialRng(uint64_t seed) : sm(seed) {}
  int uniform(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(sm.next() % static_cast<uint64_t>(hi - lo + 1));
  }
  // numerators in [-9, 9], denominators in {1, 2, 3}
  Rational rational() {
    Rational q(uniform(-9, 9), uniform(1, 3));
    q.canonicalize();  // the two-argument mpq constructor does not reduce
    return q;
  }
  Polynomial polynomial(int max_degree) {
    Vec cs(uniform(0, max_degree) + 1);
    for (auto& c : cs) c = rational();
    return Polynomial(std::move(cs));
  }
};

SlodowyCoefficients random_coefficients(const SlodowyData& sd, const Rational& lambda, TrialRng& rng,
                                        int degree_cap);
// random polynomial element of the unipotent radical u
PMatrix random_unipotent_direction(const ParabolicData& pd, TrialRng& rng, int degree_cap);

struct SuiteOptions {
  ModelDescriptor desc;
  Rational lambda = 1;
  int trials = 100;
  uint64_t seed = 1;
  int degree_cap = 3;
  bool parallel = true;
};

struct TrialFailure {
  int trial = 0;
  std::string what;
};

struct SuiteResult {
  int trials = 0;
  int passed = 0;
  std::vector<TrialFailure> failures;
  bool ok() const { return passed == trials; }
};

// build -> random unipotent gauge -> normalize must recover the coefficients
// exactly; so/sp form preservation checked inline on every gauge output.
SuiteResult run_roundtrip_suite(const ModelContext& mc, const SuiteOptions& opt);
SuiteResult run_roundtrip_suite_serial(const ModelContext& mc, const SuiteOptions& opt);

// decompose(compose(u, v)) == (u, v) on random slice data.
SuiteResult run_lynch_suite(const ModelContext& mc, const SuiteOptions& opt);

// coefficients of xi . conn == xi . coefficients of conn.
SuiteResult run_cstar_suite(const ModelContext& mc, const SuiteOptions& opt);

struct TableResult {
  ModelDescriptor desc;
  ModuleMultiplicities computed;
  ModuleMultiplicities expected;
  int centralizer_dim = 0;
  bool ok() const { return computed.entries == expected.entries; }
};

TableResult run_table_check(const ModelDescriptor& desc);

}  // namespace opslice
