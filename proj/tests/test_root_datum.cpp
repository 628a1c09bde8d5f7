#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcg/root_datum.hpp"
#include "rcg/testing.hpp"

using namespace rcg;

namespace {

// |R| for the simple types.
Index expected_root_count(SimpleType t, Index n) {
  switch (t) {
    case SimpleType::A: return n * (n + 1);
    case SimpleType::B:
    case SimpleType::C: return 2 * n * n;
    case SimpleType::D: return 2 * n * (n - 1);
    case SimpleType::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case SimpleType::F: return 48;
    case SimpleType::G: return 12;
  }
  return -1;
}

}  // namespace

TEST_CASE("simply connected data for the classical examples") {
  SUBCASE("A1: coroot e1, root 2e1") {
    RootDatum d = simple_sc(SimpleType::A, 1);
    CHECK(d.rank == 1);
    CHECK(d.num_roots() == 2);
    CHECK(equal(coroot_embedding(d).matrix, IntMatrix::Identity(1, 1)));
    bool found = false;
    for (Index j = 0; j < 2; ++j)
      if (d.coroots(0, j) == 1 && d.roots(0, j) == 2) found = true;
    CHECK(found);
  }
  SUBCASE("A2 closes to six roots") {
    CHECK(simple_sc(SimpleType::A, 2).num_roots() == 6);
  }
  SUBCASE("G2 closes to twelve roots") {
    CHECK(simple_sc(SimpleType::G, 2).num_roots() == 12);
  }
}

TEST_CASE("root counts match the classification") {
  struct Case {
    SimpleType t;
    Index lo, hi;
  };
  const Case cases[] = {{SimpleType::A, 1, 8}, {SimpleType::B, 1, 8},
                        {SimpleType::C, 1, 8}, {SimpleType::D, 2, 8},
                        {SimpleType::E, 6, 8}, {SimpleType::F, 4, 4},
                        {SimpleType::G, 2, 2}};
  for (const Case& c : cases)
    for (Index n = c.lo; n <= c.hi; ++n) {
      Index expect = expected_root_count(c.t, n);
      if (c.t == SimpleType::B && n == 1) expect = 2;  // B1 = A1
      if (c.t == SimpleType::C && n == 1) expect = 2;
      RootDatum sc = simple_sc(c.t, n);
      RootDatum ad = simple_adjoint(c.t, n);
      CHECK(sc.num_roots() == expect);
      CHECK(ad.num_roots() == expect);
      CHECK(sc.semisimple_rank() == n);
      CHECK(is_simply_connected(sc));
      CHECK(equal(coroot_embedding(sc).matrix, IntMatrix::Identity(n, n)));
    }
}

TEST_CASE("adjoint data") {
  SUBCASE("A1: cocharacters Z, simple coroot (2)") {
    RootDatum d = simple_adjoint(SimpleType::A, 1);
    CHECK(d.rank == 1);
    CHECK(equal(coroot_embedding(d).matrix, mat_from_rows({{2}})));
    CHECK_FALSE(is_simply_connected(d));
  }
  SUBCASE("A2: simple coroots are the Cartan columns") {
    RootDatum d = simple_adjoint(SimpleType::A, 2);
    IntMatrix R = coroot_embedding(d).matrix;
    IntMatrix C = cartan_matrix(SimpleType::A, 2);
    CHECK(equal(R, C));
  }
  SUBCASE("index of the coroot lattice in X_* is det of the Cartan matrix") {
    for (Index n = 1; n <= 6; ++n) {
      RootDatum d = simple_adjoint(SimpleType::A, n);
      FiniteAbelianGroup g = quotient_structure_rel(
          IntMatrix::Identity(n, n), coroot_embedding(d).matrix);
      CHECK(g.torsion_order() == n + 1);  // det Cartan(A_n) = n + 1
    }
    RootDatum g2 = simple_adjoint(SimpleType::G, 2);
    CHECK(quotient_structure_rel(IntMatrix::Identity(2, 2),
                                 coroot_embedding(g2).matrix)
              .trivial());  // det Cartan(G2) = 1
  }
}

TEST_CASE("gl, torus, product") {
  SUBCASE("gl(1) is a rank-one torus") {
    RootDatum d = gl(1);
    CHECK(d.rank == 1);
    CHECK(d.num_roots() == 0);
  }
  SUBCASE("gl(2) has the two coroots +-(1,-1)") {
    RootDatum d = gl(2);
    CHECK(d.num_roots() == 2);
    CHECK_FALSE(is_simply_connected(d));
  }
  SUBCASE("gl(3) has six coroots") { CHECK(gl(3).num_roots() == 6); }
  SUBCASE("torus data") {
    CHECK(torus(0).rank == 0);
    CHECK(torus(3).rank == 3);
    CHECK(torus(3).semisimple_rank() == 0);
    for (Index n = 0; n <= 8; ++n) CHECK_NOTHROW(validate(torus(n)));
  }
  SUBCASE("products") {
    RootDatum a1 = simple_sc(SimpleType::A, 1);
    CHECK(product(a1, torus(0)).num_roots() == 2);
    CHECK(product(a1, a1).num_roots() == 4);
    RootDatum p = product(gl(2), torus(1));
    CHECK(p.rank == 3);
    CHECK(p.semisimple_rank() == 1);
    CHECK(is_simply_connected(product(a1, simple_sc(SimpleType::C, 2))));
    RootDatum b2 = simple_adjoint(SimpleType::B, 2);
    CHECK(equal(product(product(a1, b2), p), product(a1, product(b2, p))));
  }
  SUBCASE("gl(3) embeds the A2 base") {
    CHECK(equal(coroot_embedding(gl(3)).matrix,
                mat_from_rows({{1, 0}, {-1, 1}, {0, -1}})));
  }
}

TEST_CASE("validate rejects broken data") {
  SUBCASE("tampered pairing") {
    RootDatum d;
    d.rank = 1;
    d.coroots = mat_from_rows({{1, -1}});
    d.roots = mat_from_rows({{1, -1}});  // <alpha, alpha^vee> = 1
    CHECK_THROWS_AS(validate(std::move(d)), AxiomViolation);
  }
  SUBCASE("missing negative") {
    RootDatum d;
    d.rank = 1;
    d.coroots = mat_from_rows({{1}});
    d.roots = mat_from_rows({{2}});
    d.simple_indices = {0};
    CHECK_THROWS_AS(validate(std::move(d)), AxiomViolation);
  }
  SUBCASE("reflection escapes the set") {
    RootDatum d;
    d.rank = 2;
    // two A1 pairs that are not orthogonal: s_alpha moves beta outside
    d.coroots = mat_from_rows({{1, -1, 0, 0}, {0, 0, 1, -1}});
    d.roots = mat_from_rows({{2, -2, 1, -1}, {0, 0, 2, -2}});
    d.simple_indices = {0, 2};
    CHECK_THROWS_AS(validate(std::move(d)), AxiomViolation);
  }
  SUBCASE("roots lacking a base") {
    RootDatum d = simple_sc(SimpleType::A, 2);
    d.simple_indices.clear();
    CHECK_THROWS_AS(validate(std::move(d)), AxiomViolation);
  }
  SUBCASE("duplicate pairs are merged harmlessly") {
    RootDatum d = gl(2);
    RootDatum doubled;
    doubled.rank = 2;
    doubled.coroots = IntMatrix(2, 4);
    doubled.roots = IntMatrix(2, 4);
    doubled.coroots.leftCols(2) = d.coroots;
    doubled.coroots.rightCols(2) = d.coroots;
    doubled.roots.leftCols(2) = d.roots;
    doubled.roots.rightCols(2) = d.roots;
    doubled.simple_indices = d.simple_indices;
    RootDatum cleaned = validate(std::move(doubled));
    CHECK(cleaned.num_roots() == 2);
    CHECK(equal(cleaned, d));
  }
}

TEST_CASE("invalid simple types are rejected") {
  CHECK_THROWS_AS(simple_sc(SimpleType::E, 5), InvalidType);
  CHECK_THROWS_AS(simple_sc(SimpleType::F, 3), InvalidType);
  CHECK_THROWS_AS(simple_sc(SimpleType::G, 3), InvalidType);
  CHECK_THROWS_AS(simple_sc(SimpleType::D, 1), InvalidType);
  CHECK_THROWS_AS(simple_sc(SimpleType::A, 0), InvalidType);
}

TEST_CASE("validation is idempotent and survives transport") {
  testing::Rng rng;
  for (int t = 0; t < 30; ++t) {
    RootDatum d = simple_sc(SimpleType::B, rng.uniform(2, 4));
    RootDatum again = validate(d);
    CHECK(equal(again, d));
  }
}
