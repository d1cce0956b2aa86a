// Unit tests for the matrix-level layer: finite chain complexes, Hodge
// homotopies (d P + P d = I - L), seeded random complexes with cohomology
// known by construction, the ran(L) subcomplex, the hat/tilde modification,
// grids of complexes twisted by exp(K), and the matrix BGG step.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "bgg/finite_complex.hpp"
#include "bgg/grid.hpp"

using namespace bgg;

namespace {

LinearOp mat(std::size_t rows, std::size_t cols, std::vector<std::vector<int>> a) {
  LinearOp m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i][j] != 0) m.set(i, j, Rational(a[i][j]));
  return m;
}

// 0 -> Q --(1,0)--> Q^2 --(0,1)--> Q -> 0, exact in the middle.
FiniteComplex tiny_exact() {
  FiniteComplex c;
  c.dims = {1, 2, 1};
  c.d = {mat(2, 1, {{1}, {0}}), mat(1, 2, {{0, 1}})};
  return c;
}

}  // namespace

TEST_CASE("validation, cohomology, and Euler characteristic on frozen complexes") {
  FiniteComplex c = tiny_exact();
  CHECK_NOTHROW(validate_complex(c));
  CHECK(cohomology_dims(c) == std::vector<int>{0, 0, 0});
  CHECK(euler_characteristic(c.dims) == 0);
  CHECK(euler_characteristic(std::vector<int>{5, 3, 1}) == 3);

  // Zero differential: cohomology = dims.
  FiniteComplex z;
  z.dims = {2, 2};
  z.d = {LinearOp(2, 2)};
  CHECK(cohomology_dims(z) == std::vector<int>{2, 2});

  // d o d != 0 must be rejected.
  FiniteComplex bad;
  bad.dims = {1, 1, 1};
  bad.d = {mat(1, 1, {{1}}), mat(1, 1, {{1}})};
  CHECK_THROWS_AS(validate_complex(bad), std::invalid_argument);

  // Shape mismatch must be rejected.
  FiniteComplex shapes;
  shapes.dims = {1, 2, 1};
  shapes.d = {mat(2, 1, {{1}, {0}}), mat(1, 3, {{0, 1, 0}})};
  CHECK_THROWS_AS(validate_complex(shapes), std::invalid_argument);
}

TEST_CASE("random complexes are seed-deterministic with constructed cohomology") {
  RandomComplex a = random_complex(42, {2, 3, 2});
  RandomComplex b = random_complex(42, {2, 3, 2});
  REQUIRE(a.c.d.size() == b.c.d.size());
  for (std::size_t k = 0; k < a.c.d.size(); ++k) CHECK(a.c.d[k] == b.c.d[k]);
  CHECK(a.cohomology == b.cohomology);

  // Frozen values for seed 42, dims (2, 3, 2). Note chi = 1 forces
  // h0 - h1 + h2 = 1; this draw realizes (2, 1, 0).
  CHECK(a.cohomology == std::vector<int>{2, 1, 0});
  CHECK(cohomology_dims(a.c) == a.cohomology);
  CHECK(a.c.d[0] == LinearOp(3, 2));
  CHECK(a.c.d[1] == mat(2, 3, {{2, 1, 4}, {0, 0, 1}}));

  // Different seeds give different differentials (generically).
  RandomComplex c = random_complex(43, {2, 3, 2});
  bool same = a.c.d[0] == c.c.d[0] && a.c.d[1] == c.c.d[1];
  CHECK(!same);

  // Constructed cohomology matches the rank computation across seeds/shapes.
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    RandomComplex rc = random_complex(seed, {3, 4, 4, 2});
    CHECK_NOTHROW(validate_complex(rc.c));
    CHECK(cohomology_dims(rc.c) == rc.cohomology);
  }
}

TEST_CASE("Hodge homotopy: d P + P d = I - L with harmonic projector L") {
  RandomComplex rc = random_complex(7, {3, 5, 4});
  HomotopySet h = hodge_homotopy(rc.c);
  HomotopyReport rep = check_homotopy(rc.c, h);
  CHECK(rep.homotopy_ok);
  CHECK(rep.dl_commutes);
  CHECK(rep.detail.empty());
  for (std::size_t k = 0; k < h.L.size(); ++k) {
    CHECK(h.L[k] * h.L[k] == h.L[k]);  // projector
    if (k + 1 < h.L.size()) {
      CHECK(rc.c.d[k] * h.L[k] == LinearOp(rc.c.d[k].rows(), rc.c.d[k].cols()));
      CHECK(h.L[k + 1] * rc.c.d[k] == LinearOp(rc.c.d[k].rows(), rc.c.d[k].cols()));
    }
    // rank L = cohomology dimension (harmonic representatives).
    CHECK(rank_of(h.L[k]) == static_cast<std::size_t>(rc.cohomology[k]));
  }

  // A corrupted L breaks the identity and the checker reports it.
  HomotopySet badh = h;
  badh.L[0].set(0, 0, badh.L[0].at(0, 0) + Rational(1));
  HomotopyReport badrep = check_homotopy(rc.c, badh);
  CHECK(!badrep.homotopy_ok);
  CHECK(!badrep.detail.empty());
}

TEST_CASE("the ran(L) subcomplex carries the full cohomology") {
  for (std::uint64_t seed : {1, 2, 3}) {
    RandomComplex rc = random_complex(seed, {2, 4, 3, 2});
    HomotopySet h = hodge_homotopy(rc.c);
    SubcomplexResult sub = subcomplex_from_L(rc.c, h);
    CHECK(sub.equal);
    CHECK(sub.cohomology_full == rc.cohomology);
    CHECK(sub.cohomology_sub == rc.cohomology);
    // The harmonic subcomplex has zero differential, so its dims equal its
    // cohomology.
    CHECK(sub.sub.dims == rc.cohomology);
    CHECK_NOTHROW(validate_complex(sub.sub));
  }

  // Refuses homotopy sets that fail the identity.
  RandomComplex rc = random_complex(9, {2, 3});
  HomotopySet h = hodge_homotopy(rc.c);
  h.P[0].set(0, 0, h.P[0].at(0, 0) + Rational(1));
  if (!check_homotopy(rc.c, h).homotopy_ok)
    CHECK_THROWS_AS(subcomplex_from_L(rc.c, h), std::invalid_argument);
}

TEST_CASE("hat/tilde modification: P~ squares to zero, annihilates L, keeps the identity") {
  for (std::uint64_t seed : {4, 5}) {
    RandomComplex rc = random_complex(seed, {3, 4, 4, 3});
    HomotopySet h = hodge_homotopy(rc.c);
    HomotopySet ht = modify_hat_tilde(rc.c, h);
    HomotopyReport rep = check_homotopy(rc.c, ht);
    CHECK(rep.homotopy_ok);
    for (std::size_t k = 0; k + 1 < ht.P.size(); ++k)
      CHECK(ht.P[k] * ht.P[k + 1] ==
            LinearOp(ht.P[k].rows(), ht.P[k + 1].cols()));
    for (std::size_t k = 0; k < ht.P.size(); ++k) {
      CHECK(ht.L[k] * ht.P[k] == LinearOp(ht.L[k].rows(), ht.P[k].cols()));
      CHECK(ht.P[k] * ht.L[k + 1] == LinearOp(ht.P[k].rows(), ht.L[k + 1].cols()));
    }
  }

  // Precondition violations throw.
  RandomComplex rc = random_complex(6, {2, 3, 2});
  HomotopySet h = hodge_homotopy(rc.c);
  h.L[1].set(0, 0, h.L[1].at(0, 0) + Rational(1));
  CHECK_THROWS_AS(modify_hat_tilde(rc.c, h), std::invalid_argument);
}

TEST_CASE("vectorization: offsets and block-diagonal differential") {
  GridComplex g;
  g.row.push_back(random_complex(11, {2, 3, 2}).c);
  g.row.push_back(random_complex(12, {1, 2, 1}).c);
  CHECK_NOTHROW(validate_grid(g));
  VectorizedGrid v = vectorize(g);
  CHECK(v.total.dims == std::vector<int>{3, 5, 3});
  REQUIRE(v.offset.size() == 3);
  CHECK(v.offset[0] == std::vector<int>{0, 2});
  CHECK(v.offset[1] == std::vector<int>{0, 3});
  CHECK_NOTHROW(validate_complex(v.total));
  // Top-left block of the total differential is row 0's differential.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(v.total.d[0].at(i, j) == g.row[0].d[0].at(i, j));
}

TEST_CASE("exp(K) conjugation: K = 0 is the identity twist") {
  GridComplex g;
  g.row.push_back(random_complex(21, {2, 3, 2}).c);
  g.row.push_back(random_complex(22, {2, 2, 1}).c);
  std::vector<HomotopySet> per_row = {hodge_homotopy(g.row[0]), hodge_homotopy(g.row[1])};
  VectorizedGrid v = vectorize(g);

  TwistResult t = conjugate_by_expK(g, zero_kfamily(g), vectorize_homotopy(g, per_row));
  for (std::size_t i = 0; i < t.F.size(); ++i)
    CHECK(t.F[i] == LinearOp::identity(static_cast<std::size_t>(v.total.dims[i])));
  for (std::size_t i = 0; i < t.S.size(); ++i)
    CHECK(t.S[i] == LinearOp(t.S[i].rows(), t.S[i].cols()));
  for (std::size_t i = 0; i < t.twisted.d.size(); ++i)
    CHECK(t.twisted.d[i] == v.total.d[i]);
  CHECK(check_homotopy(t.twisted, t.h).homotopy_ok);
}

TEST_CASE("exp(K) conjugation: two-row K gives F = I + K and a valid twist") {
  GridComplex g;
  g.row.push_back(random_complex(31, {2, 3, 2}).c);
  g.row.push_back(random_complex(32, {2, 2, 2}).c);
  std::vector<HomotopySet> per_row = {hodge_homotopy(g.row[0]), hodge_homotopy(g.row[1])};
  VectorizedGrid v = vectorize(g);

  KFamily k = zero_kfamily(g);
  // One nonzero block: degree 1, row 1 -> row 0 (shape 3 x 2).
  k.blocks[1][0] = mat(3, 2, {{1, 0}, {0, 2}, {1, 1}});

  TwistResult t = conjugate_by_expK(g, k, vectorize_homotopy(g, per_row));
  // Two rows force K o K = 0, so exp(K) = I + K exactly.
  LinearOp expect = LinearOp::identity(5);
  expect.insert_block(0, static_cast<std::size_t>(v.offset[1][1]), k.blocks[1][0]);
  CHECK(t.F[1] == expect);
  CHECK(t.F[0] == LinearOp::identity(4));
  CHECK(t.F[1] * t.Finv[1] == LinearOp::identity(5));

  CHECK_NOTHROW(validate_complex(t.twisted));
  HomotopyReport rep = check_homotopy(t.twisted, t.h);
  CHECK(rep.homotopy_ok);
  CHECK(rep.dl_commutes);

  // Twisted cohomology equals the row sum.
  std::vector<int> want(3);
  std::vector<int> top = cohomology_dims(g.row[0]), bottom = cohomology_dims(g.row[1]);
  for (int i = 0; i < 3; ++i)
    want[static_cast<std::size_t>(i)] =
        top[static_cast<std::size_t>(i)] + bottom[static_cast<std::size_t>(i)];
  CHECK(cohomology_dims(t.twisted) == want);

  // A K-family with S K != K S is rejected: needs >= 3 rows to be possible,
  // so here instead corrupt the grid shape.
  KFamily badk = zero_kfamily(g);
  badk.blocks[1][0] = mat(2, 2, {{1, 0}, {0, 1}});
  CHECK_THROWS_AS(conjugate_by_expK(g, badk, vectorize_homotopy(g, per_row)),
                  std::invalid_argument);
}

TEST_CASE("matrix BGG step restricts to Upsilon with the identities asserted") {
  GridComplex g;
  g.row.push_back(random_complex(51, {2, 3, 3, 2}).c);
  g.row.push_back(random_complex(52, {2, 3, 2, 1}).c);
  std::vector<HomotopySet> per_row = {hodge_homotopy(g.row[0]), hodge_homotopy(g.row[1])};
  KFamily k = zero_kfamily(g);
  k.blocks[1][0] = mat(3, 3, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  k.blocks[2][0] = mat(3, 2, {{0, 1}, {1, 0}, {1, 1}});

  TwistResult t = conjugate_by_expK(g, k, vectorize_homotopy(g, per_row));
  MatrixBGG bgg = matrix_bgg_step(t);
  CHECK_NOTHROW(validate_complex(bgg.bgg));
  CHECK(check_homotopy(bgg.bgg, bgg.h).homotopy_ok);
  // Upsilon dims = rank of the projectors; basis columns span them.
  for (std::size_t i = 0; i < bgg.proj.size(); ++i) {
    CHECK(bgg.proj[i] * bgg.proj[i] == bgg.proj[i]);
    CHECK(rank_of(bgg.proj[i]) == static_cast<std::size_t>(bgg.bgg.dims[i]));
    CHECK(rank_of(bgg.basis[i]) == static_cast<std::size_t>(bgg.bgg.dims[i]));
  }
}

TEST_CASE("seeded abstract instances pass end to end") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    AbstractInstanceReport rep = run_abstract_instance(seed);
    CHECK(rep.pass);
    CHECK(rep.detail.empty());
  }
}

TEST_CASE("complex JSON round-trip") {
  RandomComplex rc = random_complex(17, {2, 4, 3});
  nlohmann::json j = complex_to_json(rc.c);
  FiniteComplex back = complex_from_json(j);
  CHECK(back.dims == rc.c.dims);
  REQUIRE(back.d.size() == rc.c.d.size());
  for (std::size_t k = 0; k < back.d.size(); ++k) CHECK(back.d[k] == rc.c.d[k]);
}
