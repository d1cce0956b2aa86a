// Unit tests for the de Rham homotopy: d P + P d = identity on k-forms for
// k >= 1 and P(d u) = u - u(0) on 0-forms, exercised both through the
// exhaustive monomial checker and on seeded random forms with larger
// coefficients than the checker uses.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bgg/derham.hpp"
#include "bgg/sampling.hpp"

using namespace bgg;

TEST_CASE("exhaustive monomial homotopy check passes for n = 1, 2, 3") {
  for (int n = 1; n <= 3; ++n) {
    DerhamCheck rep = homotopy_check_derham(n, 6);
    CHECK(rep.pass);
    CHECK(rep.n == n);
    CHECK(rep.entries.size() == static_cast<std::size_t>(n) + 1);
    for (const auto& e : rep.entries) {
      CHECK(e.pass);
      CHECK(e.cases > 0);
      CHECK(e.counterexample.empty());
    }
  }
}

TEST_CASE("case counts: one case per index set per monomial") {
  DerhamCheck rep = homotopy_check_derham(2, 3);
  // n = 2, coefficients up to degree 3: 10 monomials.
  // k = 0: 10 cases; k = 1: 2 * 10; k = 2: 1 * 10.
  REQUIRE(rep.entries.size() == 3);
  CHECK(rep.entries[0].cases == 10);
  CHECK(rep.entries[1].cases == 20);
  CHECK(rep.entries[2].cases == 10);
}

TEST_CASE("homotopy identity on seeded random vector-valued forms") {
  std::mt19937_64 rng(2024);
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= n; ++k)
      for (int trial = 0; trial < 8; ++trial) {
        PolyForm u = random_form(rng, n, k, ValueTag::V, 5);
        PolyForm lhs = koszul_poincare(exterior_d(u));
        if (k < n) lhs += exterior_d(koszul_poincare(u));
        else
          lhs = lhs + exterior_d(koszul_poincare(u));  // d of an n-form is zero
        CHECK(lhs == u);
      }
}

TEST_CASE("0-form contract: P(d u) = u - u(0)") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    PolyForm u = random_form(rng, 3, 0, ValueTag::S, 5);
    PolyForm got = koszul_poincare(exterior_d(u));
    PolyForm expect = u;
    for (int a = 0; a < u.value_dim(); ++a) {
      Poly c = u.coeff(0, a);
      expect.set_coeff(0, a, c - Poly::constant(3, c.eval_zero()));
    }
    CHECK(got == expect);
  }

  // Frozen instance: u = 1 + x1, P(du) = x1.
  PolyForm u(1, 0, ValueTag::R);
  u.set_coeff(0, 0, Poly::constant(1, 1) + Poly::variable(1, 0));
  PolyForm pd = koszul_poincare(exterior_d(u));
  CHECK(pd.coeff(0, 0) == Poly::variable(1, 0));
}

TEST_CASE("P is a left inverse of d up to the identity: dP and Pd are projections") {
  // On k >= 1, dP and Pd are complementary projections (they sum to the
  // identity and each is idempotent) -- a consequence of P d P = P.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 6; ++trial) {
    PolyForm u = random_form(rng, 3, 2, ValueTag::R, 4);
    PolyForm pu = koszul_poincare(u);
    CHECK(koszul_poincare(exterior_d(pu)) == pu);  // P d P = P
    PolyForm du = exterior_d(u);
    CHECK(exterior_d(koszul_poincare(du)) == du);  // d P d = d
  }
}
