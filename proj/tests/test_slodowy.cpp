#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opslice/slodowy.hpp"
#include "opslice/suites.hpp"

using namespace opslice;

namespace {

QMatrix qm(int n, std::initializer_list<std::initializer_list<int>> rows) {
  QMatrix m(n, n);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (int v : r) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

Sl2Triple sl4_case1() {
  return {qm(4, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}),
          qm(4, {{3, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -3}}),
          qm(4, {{0, 3, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 3}, {0, 0, 0, 0}})};
}

Sl2Triple sl4_case2() {
  return {qm(4, {{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}}),
          qm(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}),
          qm(4, {{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}})};
}

Sl2Triple sl4_case3() {
  return {qm(4, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}}),
          qm(4, {{2, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -2}}),
          qm(4, {{0, 2, 0, 0}, {0, 0, 0, 2}, {0, 0, 0, 0}, {0, 0, 0, 0}})};
}

Sl2Triple sl2_standard() {
  return {qm(2, {{0, 0}, {1, 0}}), qm(2, {{1, 0}, {0, -1}}), qm(2, {{0, 1}, {0, 0}})};
}

}  // namespace

TEST_CASE("centralizer dimensions") {
  LieAlgebra sl2 = construct_classical(Family::sl, 2);
  SubspaceBasis v2 = centralizer_of_e(sl2_standard(), sl2);
  CHECK(v2.dim() == 1);
  CHECK(coordinates(v2, sl2_standard().e).has_value());

  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  CHECK(centralizer_of_e(sl4_case1(), sl4).dim() == 3);
  CHECK(centralizer_of_e(sl4_case2(), sl4).dim() == 7);
}

TEST_CASE("slodowy data of the sl_4 worked examples") {
  LieAlgebra sl4 = construct_classical(Family::sl, 4);

  SlodowyData s1 = slodowy_data(sl4_case1(), sl4);
  CHECK(s1.exponents == std::vector<int>{1, 2, 3});
  CHECK(s1.c_basis.dim() == 0);
  CHECK(s1.vhat2.dim() == 0);

  SlodowyData s2 = slodowy_data(sl4_case2(), sl4);
  CHECK(s2.exponents == std::vector<int>{1});
  CHECK(s2.c_basis.dim() == 3);
  CHECK(s2.hw_spaces.at(1).dim() == 4);
  CHECK(s2.vhat2.dim() == 3);
  // Vhat2 is the traceless part of the upper-right block
  for (const auto& v : s2.vhat2.vectors) {
    Rational block_trace = v.at(0, 2) + v.at(1, 3);
    CHECK(block_trace == 0);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!(i < 2 && j >= 2)) CHECK(v.at(i, j) == 0);
  }

  SlodowyData s3 = slodowy_data(sl4_case3(), sl4);
  CHECK(s3.exponents == std::vector<int>{1, 2});
  CHECK(s3.c_basis.dim() == 1);
  CHECK(s3.hw_spaces.at(1).dim() == 3);
  CHECK(s3.vhat2.dim() == 2);
  // Vhat2 is cut out by the vanishing of the e-direction coordinate
  for (const auto& v : s3.vhat2.vectors) {
    CHECK(v.at(0, 1) == 0);
    CHECK(v.at(1, 3) == 0);
  }
}

TEST_CASE("slodowy data invariants") {
  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  for (const Sl2Triple& t : {sl4_case1(), sl4_case2(), sl4_case3()}) {
    SlodowyData sd = slodowy_data(t, sl4);
    CHECK(!sd.exponents.empty());
    CHECK(sd.exponents.front() == 1);

    for (const auto& c : sd.c_basis.vectors) {
      CHECK(bracket(t.e, c).is_zero());
      CHECK(bracket(t.f, c).is_zero());
      CHECK(bracket(t.h, c).is_zero());
    }
    int hw_total = 0;
    for (const auto& [m, s] : sd.hw_spaces) {
      hw_total += s.dim();
      for (const auto& v : s.vectors) {
        CHECK(bracket(t.e, v).is_zero());
        CHECK(coordinates(*sd.grading.space(2 * m), v).has_value());
      }
    }
    CHECK(sd.c_basis.dim() + hw_total == centralizer_of_e(t, sl4).dim());

    // V_2 = <e> + Vhat2 with the Killing functional split
    CHECK(sd.vhat2.dim() + 1 == sd.hw_spaces.at(1).dim());
    CHECK(killing_form(t.f, t.e, sl4) != 0);
    for (const auto& v : sd.vhat2.vectors) CHECK(killing_form(t.f, v, sl4) == 0);

    // the data reproduces the module multiplicities
    ModuleMultiplicities mm = module_multiplicities(t, sl4, sd.grading);
    CHECK(mm.at(0) == sd.c_basis.dim());
    for (const auto& [m, s] : sd.hw_spaces) CHECK(mm.at(2 * m) == s.dim());
  }
}

TEST_CASE("slodowy data rejects odd triples") {
  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  Sl2Triple odd = jm_complete(partition_nilpotent({2, 1, 1}, sl4), sl4);
  CHECK_THROWS_AS(slodowy_data(odd, sl4), not_even_error);
  CHECK_THROWS_AS(parabolic_data(odd, sl4), not_even_error);
}

TEST_CASE("parabolic data of the worked examples") {
  LieAlgebra sl2 = construct_classical(Family::sl, 2);
  ParabolicData p2 = parabolic_data(sl2_standard(), sl2);
  CHECK(p2.p_basis.dim() == 2);
  CHECK(p2.levi_basis.dim() == 1);
  REQUIRE(p2.u_filtration.size() == 1);
  CHECK(p2.u_filtration[0].dim() == 1);
  CHECK(coordinates(p2.u_filtration[0], sl2_standard().e).has_value());

  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  ParabolicData pc2 = parabolic_data(sl4_case2(), sl4);
  CHECK(pc2.p_basis.dim() == 11);
  REQUIRE(pc2.u_filtration.size() == 1);
  CHECK(pc2.u_filtration[0].dim() == 4);

  ParabolicData pc3 = parabolic_data(sl4_case3(), sl4);
  REQUIRE(pc3.u_filtration.size() == 2);
  CHECK(pc3.u_filtration[0].dim() == 5);
  CHECK(pc3.u_filtration[1].dim() == 1);
}

TEST_CASE("parabolic filtration invariants") {
  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  for (const Sl2Triple& t : {sl4_case1(), sl4_case3()}) {
    ParabolicData pd = parabolic_data(t, sl4);
    // p = levi + u^1
    CHECK(pd.p_basis.dim() == pd.levi_basis.dim() + pd.u_filtration[0].dim());
    // nested filtration
    for (size_t i = 0; i + 1 < pd.u_filtration.size(); ++i)
      for (const auto& v : pd.u_filtration[i + 1].vectors)
        CHECK(coordinates(pd.u_filtration[i], v).has_value());
    // [u^i, u^j] in u^{i+j}
    const int m = static_cast<int>(pd.u_filtration.size());
    for (int i = 1; i <= m; ++i)
      for (int j = 1; i + j <= m; ++j)
        for (const auto& x : pd.u_filtration[i - 1].vectors)
          for (const auto& y : pd.u_filtration[j - 1].vectors) {
            QMatrix b = bracket(x, y);
            if (!b.is_zero()) CHECK(coordinates(pd.u_filtration[i + j - 1], b).has_value());
          }
    // P-invariance of the canonical filtration: [p, g^j] in g^j
    for (const auto& [j, gj] : pd.neg_filtration)
      for (const auto& x : pd.p_basis.vectors)
        for (const auto& y : gj.vectors) {
          QMatrix b = bracket(x, y);
          if (!b.is_zero()) CHECK(coordinates(pd.neg_filtration.at(j), b).has_value());
        }
  }
}

TEST_CASE("open orbit membership") {
  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  for (const Sl2Triple& t : {sl4_case1(), sl4_case2(), sl4_case3()}) {
    ParabolicData pd = parabolic_data(t, sl4);
    CHECK(open_orbit_member(t.f, pd, -2, sl4));
    CHECK(!open_orbit_member(QMatrix(4, 4), pd, -2, sl4));
    CHECK(open_orbit_member(t.e, pd, 2, sl4));
  }

  // case 2: lower-left block x is in the orbit iff det(C) != 0
  ParabolicData pd = parabolic_data(sl4_case2(), sl4);
  QMatrix invertible = qm(4, {{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 2, 0, 0}, {3, 4, 0, 0}});
  CHECK(open_orbit_member(invertible, pd, -2, sl4));
  QMatrix singular = qm(4, {{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 2, 0, 0}, {2, 4, 0, 0}});
  CHECK(!open_orbit_member(singular, pd, -2, sl4));

  CHECK_THROWS_AS(open_orbit_member(sl4_case2().e, pd, -2, sl4), wrong_weight_error);
}

TEST_CASE("graded complement identity") {
  // g_d = V_d + ad_f(g_{d+2}) as an exact direct sum, for every even d >= 0
  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  for (const Sl2Triple& t : {sl4_case1(), sl4_case2(), sl4_case3()}) {
    SlodowyData sd = slodowy_data(t, sl4);
    for (int d = 0; d <= 2 * sd.top_exponent(); d += 2) {
      const int dim_gd = sd.grading.dim_at(d);
      const int dim_vd = d == 0 ? sd.c_basis.dim()
                                : (sd.hw_spaces.count(d / 2) ? sd.hw_spaces.at(d / 2).dim() : 0);
      const int dim_up = sd.grading.dim_at(d + 2);
      CHECK(dim_gd == dim_vd + dim_up);
    }
    CHECK_NOTHROW(make_slice_splitter(sl4, sd));
  }
}

TEST_CASE("lynch identity case") {
  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  SlodowyData sd = slodowy_data(sl4_case2(), sl4);
  TrialRng rng(3);
  QMatrix v(4, 4);
  for (const auto& b : sd.c_basis.vectors) {
    QMatrix t = b;
    t.scale(rng.rational());
    v += t;
  }
  QMatrix a = sl4_case2().f + v;
  LynchParts<Rational> parts = lynch_decompose(a, sd, sl4);
  CHECK(parts.x_parts.empty());
  CHECK(parts.v == v);
}

TEST_CASE("lynch in sl_2 matches the closed form") {
  LieAlgebra sl2 = construct_classical(Family::sl, 2);
  Sl2Triple t = sl2_standard();
  SlodowyData sd = slodowy_data(t, sl2);
  TrialRng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    Rational alpha = rng.rational(), beta = rng.rational();
    QMatrix a = t.f;
    QMatrix ah = t.h;
    ah.scale(alpha);
    QMatrix ae = t.e;
    ae.scale(beta);
    a += ah;
    a += ae;
    LynchParts<Rational> parts = lynch_decompose(a, sd, sl2);
    QMatrix expect_v = t.e;
    expect_v.scale(beta + alpha * alpha);
    CHECK(parts.v == expect_v);
    if (alpha == 0) {
      CHECK(parts.x_parts.empty());
    } else {
      REQUIRE(parts.x_parts.count(2) == 1);
      QMatrix expect_x = t.e;
      expect_x.scale(alpha);
      CHECK(parts.x_parts.at(2) == expect_x);
    }
  }
}

TEST_CASE("lynch roundtrip on random slice data") {
  for (auto desc : {ModelDescriptor{ModelFamily::tube_sl, 2, 0},
                    ModelDescriptor{ModelFamily::sln_borel, 4, 0},
                    ModelDescriptor{ModelFamily::tube_sp, 2, 0}}) {
    ModelContext mc = make_model_context(desc);
    SuiteOptions opt;
    opt.desc = desc;
    opt.trials = 25;
    opt.seed = 99;
    SuiteResult r = run_lynch_suite(mc, opt);
    if (!r.failures.empty()) MESSAGE(r.failures[0].what);
    CHECK(r.ok());
  }
}

TEST_CASE("lynch rejects elements off the slice preimage") {
  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  SlodowyData sd = slodowy_data(sl4_case2(), sl4);
  QMatrix a = sl4_case2().f;
  a.scale(Rational(2));  // weight -2 part is 2f, not f
  CHECK_THROWS_AS(lynch_decompose(a, sd, sl4), not_in_slice_error);
}

TEST_CASE("Ad(u) of f moves by -ad_f at the leading level") {
  // for u = exp(x_j + higher), Ad(u)(f) - f = -ad_f(x_j) + terms above weight j - 2
  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  Sl2Triple t = sl4_case1();
  SlodowyData sd = slodowy_data(t, sl4);
  TrialRng rng(25);
  for (int j : {2, 4, 6}) {
    QMatrix x(4, 4);
    for (int w : sd.grading.weights) {
      if (w < j) continue;
      for (const auto& b : sd.grading.spaces.at(w).vectors) {
        QMatrix s = b;
        s.scale(rng.rational());
        x += s;
      }
    }
    auto xc = sd.grading.decompose(sl4, x);
    if (!xc.count(j)) continue;
    QMatrix u = nilpotent_exp(x), u_inv = nilpotent_exp(-x);
    QMatrix moved = u * t.f * u_inv - t.f;
    auto comps = sd.grading.decompose(sl4, moved);
    REQUIRE(comps.count(j - 2));
    QMatrix expect = bracket(t.f, xc.at(j));
    expect.scale(Rational(-1));
    CHECK(comps.at(j - 2) == expect);
  }
}
