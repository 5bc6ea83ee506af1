#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opslice/minors.hpp"
#include "opslice/sl2.hpp"
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

// The three even sl_4 triples: principal, stabilizer of C^2, stabilizer of
// the flag C^1 in C^3.
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

Polynomial char_poly(const QMatrix& m) {
  PMatrix t(m.rows(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j) {
      t.at(i, j) = Polynomial(-m.at(i, j));
      if (i == j) t.at(i, j) += Polynomial::z();
    }
  return poly_det(t);
}

bool all_parts_same_parity(const std::vector<int>& p) {
  for (int v : p)
    if (v % 2 != p[0] % 2) return false;
  return true;
}

}  // namespace

TEST_CASE("jm completion in sl_2 is forced") {
  LieAlgebra sl2 = construct_classical(Family::sl, 2);
  QMatrix e(2, 2);
  e.at(0, 1) = 1;
  Sl2Triple t = jm_complete(e, sl2);
  CHECK(t.h == qm(2, {{1, 0}, {0, -1}}));
  CHECK(t.f == qm(2, {{0, 0}, {1, 0}}));
}

TEST_CASE("jm completion of the principal sl_4 nilpotent") {
  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  Sl2Triple t = jm_complete(sl4_case1().e, sl4);
  CHECK(validate_triple(t));
  // h is conjugate to diag(3, 1, -1, -3)
  Polynomial expected = char_poly(qm(4, {{3, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -3}}));
  CHECK(char_poly(t.h) == expected);
}

TEST_CASE("jm completion satisfies the relations on random nilpotents") {
  LieAlgebra sl3 = construct_classical(Family::sl, 3);
  TrialRng rng(42);
  int done = 0;
  while (done < 50) {
    QMatrix e(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) e.at(i, j) = rng.rational();
    if (e.is_zero()) continue;
    Sl2Triple t = jm_complete(e, sl3);
    CHECK(validate_triple(t));
    ++done;
  }
}

TEST_CASE("jm completion rejects bad input") {
  LieAlgebra sl2 = construct_classical(Family::sl, 2);
  CHECK_THROWS_AS(jm_complete(QMatrix(2, 2), sl2), zero_element_error);
  CHECK_THROWS_AS(jm_complete(qm(2, {{1, 0}, {0, -1}}), sl2), not_nilpotent_error);
}

TEST_CASE("validate_triple") {
  Sl2Triple t = sl4_case1();
  CHECK(validate_triple(t));
  CHECK(validate_triple(sl4_case2()));
  CHECK(validate_triple(sl4_case3()));
  Sl2Triple scaled = t;
  scaled.e.scale(Rational(2));
  CHECK(!validate_triple(scaled));
}

TEST_CASE("gradings of the sl_4 worked examples") {
  LieAlgebra sl4 = construct_classical(Family::sl, 4);

  GradedDecomposition g1 = ad_h_grading(sl4_case1(), sl4);
  CHECK(g1.weights == std::vector<int>{-6, -4, -2, 0, 2, 4, 6});

  GradedDecomposition g2 = ad_h_grading(sl4_case2(), sl4);
  CHECK(g2.weights == std::vector<int>{-2, 0, 2});
  CHECK(g2.dim_at(-2) == 4);
  CHECK(g2.dim_at(0) == 7);
  CHECK(g2.dim_at(2) == 4);

  int total = 0;
  for (int w : g2.weights) total += g2.dim_at(w);
  CHECK(total == 15);
}

TEST_CASE("sl_2 grading") {
  LieAlgebra sl2 = construct_classical(Family::sl, 2);
  QMatrix e(2, 2);
  e.at(0, 1) = 1;
  GradedDecomposition gr = ad_h_grading(jm_complete(e, sl2), sl2);
  CHECK(gr.weights == std::vector<int>{-2, 0, 2});
  for (int w : gr.weights) CHECK(gr.dim_at(w) == 1);
}

TEST_CASE("graded pieces bracket correctly") {
  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  GradedDecomposition gr = ad_h_grading(sl4_case3(), sl4);
  for (int wi : gr.weights)
    for (int wj : gr.weights) {
      for (const auto& x : gr.spaces.at(wi).vectors)
        for (const auto& y : gr.spaces.at(wj).vectors) {
          QMatrix b = bracket(x, y);
          if (b.is_zero()) continue;
          const SubspaceBasis* target = gr.space(wi + wj);
          REQUIRE(target != nullptr);
          CHECK(coordinates(*target, b).has_value());
        }
    }
}

TEST_CASE("evenness") {
  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  CHECK(is_even(sl4_case1(), sl4));
  QMatrix e211 = partition_nilpotent({2, 1, 1}, sl4);
  CHECK(!is_even(jm_complete(e211, sl4), sl4));
}

TEST_CASE("evenness is invariant under unipotent conjugation") {
  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  TrialRng rng(17);
  for (const Sl2Triple& t : {sl4_case1(), sl4_case2()}) {
    for (int trial = 0; trial < 5; ++trial) {
      QMatrix x(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) x.at(i, j) = rng.rational();
      QMatrix u = nilpotent_exp(x), u_inv = nilpotent_exp(-x);
      Sl2Triple conj{u * t.f * u_inv, u * t.h * u_inv, u * t.e * u_inv};
      CHECK(validate_triple(conj));
      CHECK(is_even(conj, sl4) == is_even(t, sl4));
    }
  }
}

TEST_CASE("module multiplicities of the sl_4 worked examples") {
  LieAlgebra sl4 = construct_classical(Family::sl, 4);

  ModuleMultiplicities m1 = module_multiplicities(sl4_case1(), sl4);
  CHECK(m1.at(0) == 0);
  CHECK(m1.at(2) == 1);
  CHECK(m1.at(4) == 1);
  CHECK(m1.at(6) == 1);

  ModuleMultiplicities m2 = module_multiplicities(sl4_case2(), sl4);
  CHECK(m2.at(0) == 3);
  CHECK(m2.at(2) == 4);

  ModuleMultiplicities m3 = module_multiplicities(sl4_case3(), sl4);
  CHECK(m3.at(0) == 1);
  CHECK(m3.at(2) == 3);
  CHECK(m3.at(4) == 1);
}

TEST_CASE("module multiplicities of an odd triple") {
  // partition [2,1,1]: one adjoint copy, four 2-dimensional summands, and
  // 15 - 3 - 8 = 4 trivials
  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  Sl2Triple t = jm_complete(partition_nilpotent({2, 1, 1}, sl4), sl4);
  ModuleMultiplicities mm = module_multiplicities(t, sl4);
  CHECK(mm.at(0) == 4);
  CHECK(mm.at(1) == 4);
  CHECK(mm.at(2) == 1);
}

TEST_CASE("multiplicity dimension bookkeeping") {
  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  for (const Sl2Triple& t : {sl4_case1(), sl4_case2(), sl4_case3()}) {
    ModuleMultiplicities mm = module_multiplicities(t, sl4);
    int total = 0;
    for (const auto& [w, n] : mm.entries) total += n * (w + 1);
    CHECK(total == sl4.dim());
  }
}

TEST_CASE("principal triples") {
  LieAlgebra sl2 = construct_classical(Family::sl, 2);
  Sl2Triple t2 = principal_triple(sl2);
  CHECK(t2.e == qm(2, {{0, 1}, {0, 0}}));
  CHECK(t2.h == qm(2, {{1, 0}, {0, -1}}));

  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  Sl2Triple t4 = principal_triple(sl4);
  CHECK(t4.e == sl4_case1().e);
  CHECK(t4.h == sl4_case1().h);

  for (int n = 2; n <= 6; ++n) {
    LieAlgebra g = construct_classical(Family::sl, n);
    Sl2Triple t = principal_triple(g);
    CHECK(validate_triple(t));
    CHECK(is_even(t, g));
    ModuleMultiplicities mm = module_multiplicities(t, g);
    CHECK(mm.at(0) == 0);
    for (int m = 1; m < n; ++m) CHECK(mm.at(2 * m) == 1);
  }
}

TEST_CASE("principal triples for so and sp") {
  for (auto [fam, n] : std::vector<std::pair<Family, int>>{
           {Family::so, 4}, {Family::so, 5}, {Family::so, 6}, {Family::so, 7},
           {Family::sp, 4}, {Family::sp, 6}}) {
    LieAlgebra g = construct_classical(fam, n);
    Sl2Triple t = principal_triple(g);
    CHECK(validate_triple(t));
    CHECK(is_even(t, g));
    CHECK(preserves_form(t.e, *g.form));
    CHECK(preserves_form(t.h, *g.form));
    CHECK(preserves_form(t.f, *g.form));
  }
  // exponents of sp_4 are 1, 3
  LieAlgebra sp4 = construct_classical(Family::sp, 4);
  ModuleMultiplicities mm = module_multiplicities(principal_triple(sp4), sp4);
  CHECK(mm.at(2) == 1);
  CHECK(mm.at(6) == 1);
  CHECK(mm.at(0) == 0);
}

TEST_CASE("partition nilpotents") {
  LieAlgebra sl4 = construct_classical(Family::sl, 4);
  CHECK(partition_nilpotent({1, 1, 1, 1}, sl4).is_zero());
  QMatrix full = partition_nilpotent({4}, sl4);
  CHECK(full == qm(4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}));
  CHECK_THROWS_AS(partition_nilpotent({3, 2}, sl4), bad_partition_error);

  Sl2Triple t22 = jm_complete(partition_nilpotent({2, 2}, sl4), sl4);
  GradedDecomposition gr = ad_h_grading(t22, sl4);
  CHECK(gr.weights == std::vector<int>{-2, 0, 2});
}

TEST_CASE("parity rule for even partitions, exhaustively to n = 6") {
  for (int n = 2; n <= 6; ++n) {
    LieAlgebra g = construct_classical(Family::sl, n);
    for (const auto& p : partitions_of(n)) {
      QMatrix e = partition_nilpotent(p, g);
      if (e.is_zero()) continue;  // the all-ones partition has no triple
      Sl2Triple t = jm_complete(e, g);
      CHECK(is_even(t, g) == all_parts_same_parity(p));
    }
  }
}
