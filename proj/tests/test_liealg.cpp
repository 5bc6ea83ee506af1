#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opslice/lie_algebra.hpp"
#include "opslice/suites.hpp"

using namespace opslice;

namespace {

QMatrix random_element(const LieAlgebra& g, TrialRng& rng) {
  QMatrix m(g.n, g.n);
  for (const auto& b : g.basis) {
    Rational c = rng.rational();
    if (c == 0) continue;
    QMatrix t = b;
    t.scale(c);
    m += t;
  }
  return m;
}

}  // namespace

TEST_CASE("classical dimensions") {
  CHECK(construct_classical(Family::sl, 2).dim() == 3);
  CHECK(construct_classical(Family::sl, 4).dim() == 15);
  CHECK(construct_classical(Family::so, 4).dim() == 6);
  CHECK(construct_classical(Family::so, 7).dim() == 21);
  LieAlgebra sp4 = construct_classical(Family::sp, 4);
  CHECK(sp4.dim() == 10);
  for (const auto& b : sp4.basis) CHECK(preserves_form(b, *sp4.form));
  CHECK_THROWS_AS(construct_classical(Family::sp, 5), unsupported_family_error);
}

TEST_CASE("classical families are closed under bracket") {
  for (auto g : {construct_classical(Family::sl, 3), construct_classical(Family::so, 5),
                 construct_classical(Family::sp, 4)})
    CHECK(closed_under_bracket(g));
}

TEST_CASE("bracket basics") {
  LieAlgebra sl2 = construct_classical(Family::sl, 2);
  QMatrix e(2, 2), f(2, 2), h(2, 2);
  e.at(0, 1) = 1;
  f.at(1, 0) = 1;
  h.at(0, 0) = 1;
  h.at(1, 1) = -1;
  QMatrix two_e = e;
  two_e.scale(Rational(2));
  CHECK(bracket(h, e) == two_e);
  CHECK(bracket(e, e).is_zero());

  TrialRng rng(9);
  for (int trial = 0; trial < 15; ++trial) {
    QMatrix x = random_element(sl2, rng), y = random_element(sl2, rng), z = random_element(sl2, rng);
    QMatrix jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("adjoint operator") {
  LieAlgebra sl2 = construct_classical(Family::sl, 2);
  CHECK(adjoint_operator(QMatrix(2, 2), sl2).is_zero());

  QMatrix h(2, 2);
  h.at(0, 0) = 1;
  h.at(1, 1) = -1;
  QMatrix ad_h = adjoint_operator(h, sl2);
  // eigenvalues 2, 0, -2, each with one-dimensional eigenspace
  for (int lam : {2, 0, -2}) {
    QMatrix shifted = ad_h;
    for (int i = 0; i < 3; ++i) shifted.at(i, i) -= lam;
    CHECK(kernel_basis(shifted).size() == 1);
  }

  QMatrix e(2, 2);
  e.at(0, 1) = 1;
  QMatrix ad_e = adjoint_operator(e, sl2);
  QMatrix p = ad_e * ad_e * ad_e;
  CHECK(p.is_zero());

  QMatrix outside = QMatrix::identity(2);  // not traceless
  CHECK_THROWS_AS(adjoint_operator(outside, sl2), not_in_algebra_error);
}

TEST_CASE("killing form values and properties") {
  LieAlgebra sl2 = construct_classical(Family::sl, 2);
  QMatrix h(2, 2);
  h.at(0, 0) = 1;
  h.at(1, 1) = -1;
  CHECK(killing_form(h, QMatrix(2, 2), sl2) == 0);
  CHECK(killing_form(h, h, sl2) == 8);

  TrialRng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix x = random_element(sl2, rng), y = random_element(sl2, rng), z = random_element(sl2, rng);
    CHECK(killing_form(x, y, sl2) == killing_form(y, x, sl2));
    // invariance
    CHECK(killing_form(bracket(z, x), y, sl2) + killing_form(x, bracket(z, y), sl2) == 0);
  }
}

TEST_CASE("killing form is nondegenerate on classical algebras") {
  for (auto g : {construct_classical(Family::sl, 2), construct_classical(Family::sl, 3),
                 construct_classical(Family::so, 5), construct_classical(Family::sp, 4)}) {
    QMatrix gram(g.dim(), g.dim());
    for (int i = 0; i < g.dim(); ++i)
      for (int j = i; j < g.dim(); ++j) {
        gram.at(i, j) = killing_form(g.basis[i], g.basis[j], g);
        gram.at(j, i) = gram.at(i, j);
      }
    CHECK(rank_of(gram) == g.dim());
  }
}

TEST_CASE("so/sp brackets stay in the algebra") {
  TrialRng rng(13);
  for (auto g : {construct_classical(Family::so, 5), construct_classical(Family::sp, 4)}) {
    for (int trial = 0; trial < 10; ++trial) {
      QMatrix x = random_element(g, rng), y = random_element(g, rng);
      CHECK(preserves_form(bracket(x, y), *g.form));
    }
  }
}

TEST_CASE("subspace coordinates") {
  LieAlgebra sl3 = construct_classical(Family::sl, 3);
  SubspaceBasis s = make_subspace(sl3, {sl3.basis[0], sl3.basis[1], sl3.basis[2]});

  auto c0 = coordinates(s, sl3.basis[0]);
  REQUIRE(c0);
  CHECK(*c0 == Vec{1, 0, 0});

  QMatrix sum = sl3.basis[0] + sl3.basis[1] + sl3.basis[2];
  auto cs = coordinates(s, sum);
  REQUIRE(cs);
  CHECK(*cs == Vec{1, 1, 1});

  CHECK(!coordinates(s, sl3.basis[4]));
}

TEST_CASE("custom algebras validate closure") {
  LieAlgebra sl2 = construct_classical(Family::sl, 2);
  LieAlgebra again = construct_custom(sl2.basis);
  CHECK(again.dim() == 3);

  QMatrix e(2, 2);
  e.at(0, 1) = 1;
  QMatrix d(2, 2);
  d.at(0, 0) = 1;  // [d, e] = e works, but {e, d} alone is not closed under bracket with...
  QMatrix odd(2, 2);
  odd.at(1, 0) = 1;
  CHECK_THROWS_AS(construct_custom({e, odd}), error);  // [e, odd] = h outside the span
}

TEST_CASE("algebra json descriptors round trip") {
  for (auto g : {construct_classical(Family::sl, 3), construct_classical(Family::so, 4),
                 construct_classical(Family::sp, 4)}) {
    LieAlgebra back = algebra_from_json(algebra_to_json(g));
    CHECK(back.family == g.family);
    CHECK(back.n == g.n);
    CHECK(back.dim() == g.dim());
  }
  // custom orthogonal form survives
  QMatrix j = QMatrix::identity(3);
  LieAlgebra so3 = construct_orthogonal(3, j);
  LieAlgebra back = algebra_from_json(algebra_to_json(so3));
  REQUIRE(back.form);
  CHECK(*back.form == j);
  CHECK(back.dim() == 3);
}
