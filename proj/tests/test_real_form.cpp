#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcg/pi0_engine.hpp"
#include "rcg/real_form.hpp"
#include "rcg/testing.hpp"

using namespace rcg;

TEST_CASE("validate_form on pinned cases") {
  RootDatum a2 = simple_sc(SimpleType::A, 2);
  SUBCASE("identity and minus identity always pass") {
    CHECK_NOTHROW(validate_form(a2, {IntMatrix::Identity(2, 2), ""}));
    CHECK_NOTHROW(validate_form(a2, {IntMatrix(-IntMatrix::Identity(2, 2)), ""}));
  }
  SUBCASE("non-involutions are rejected") {
    CHECK_THROWS_AS(validate_form(a2, {mat_from_rows({{0, 2}, {0, 1}}), ""}),
                    NotInvolution);
  }
  SUBCASE("involutions that break the coroot set are rejected") {
    // theta^2 = 1 but theta e2 = (1,-1) is not a coroot of A2
    IntMatrix theta = mat_from_rows({{1, 1}, {0, -1}});
    CHECK_THROWS_AS(validate_form(a2, {theta, ""}), CorootSetNotStable);
  }
  SUBCASE("wrong size") {
    CHECK_THROWS_AS(validate_form(a2, {IntMatrix::Identity(3, 3), ""}),
                    NotInvolution);
  }
}

TEST_CASE("restriction to the simply connected cover") {
  SUBCASE("identity restricts to identity") {
    RootDatum d = simple_adjoint(SimpleType::A, 2);
    GammaLattice sc = restrict_to_sc(d, {IntMatrix::Identity(2, 2), ""});
    CHECK(equal(sc.gamma, IntMatrix::Identity(2, 2)));
  }
  SUBCASE("minus identity on sc A1") {
    RootDatum d = simple_sc(SimpleType::A, 1);
    GammaLattice sc = restrict_to_sc(d, {IntMatrix(-IntMatrix::Identity(1, 1)), ""});
    CHECK(equal(sc.gamma, mat_from_rows({{-1}})));
  }
  SUBCASE("swap on gl(2) negates the coroot line") {
    RootDatum d = gl(2);
    RealFormSpec f{mat_from_rows({{0, 1}, {1, 0}}), ""};
    validate_form(d, f);
    GammaLattice sc = restrict_to_sc(d, f);
    CHECK(equal(sc.gamma, mat_from_rows({{-1}})));
  }
}

TEST_CASE("catalog entries validate and have the declared real rank") {
  // construction re-checks the declared real rank internally
  CHECK_NOTHROW(catalog("split", {"A", "1", "adjoint"}));
  CHECK_NOTHROW(catalog("split", {"E6", "sc"}));
  CHECK_NOTHROW(catalog("compact", {"G", "2", "sc"}));
  CHECK_NOTHROW(catalog("gl", {"5"}));
  CHECK_NOTHROW(catalog("u", {"2", "2"}));
  CHECK_NOTHROW(catalog("su", {"3", "1"}));
  CHECK_NOTHROW(catalog("so", {"3", "2"}));
  CHECK_NOTHROW(catalog("so", {"4", "2"}));
  CHECK_NOTHROW(catalog("sp2n_r", {"3"}));
  CHECK_NOTHROW(catalog("torus", {"4"}));

  SUBCASE("split and compact real ranks") {
    auto [d, f] = catalog("split", {"C", "3", "sc"});
    CHECK(real_rank(d, f) == 3);
    auto [dc, fc] = catalog("compact", {"C", "3", "sc"});
    CHECK(real_rank(dc, fc) == 0);
  }
  SUBCASE("u(1,1): negated swap with invariant line (1,-1)") {
    auto [d, f] = catalog("u", {"1", "1"});
    CHECK(equal(f.theta, mat_from_rows({{0, -1}, {-1, 0}})));
    CHECK(equal(invariants(cocharacter_lattice(d, f)),
                mat_from_rows({{1}, {-1}})));
    CHECK(real_rank(d, f) == 1);
  }
  SUBCASE("real ranks across the unitary family") {
    for (long p = 0; p <= 3; ++p)
      for (long q = 0; q <= 3 - p; ++q) {
        if (p + q < 1) continue;
        auto [d, f] = catalog("u", {std::to_string(p), std::to_string(q)});
        CHECK(real_rank(d, f) == std::min(p, q));
      }
  }
  SUBCASE("orthogonal family covers the degenerate ranks") {
    CHECK(catalog("so", {"1", "1"}).first.rank == 1);   // D1 torus
    CHECK(catalog("so", {"2", "1"}).first.num_roots() == 2);  // B1
    CHECK(catalog("so", {"2", "2"}).first.num_roots() == 4);  // D2
    CHECK(catalog("so", {"3", "2"}).first.num_roots() == 8);  // B2
  }
  SUBCASE("unknown names and bad parameters") {
    CHECK_THROWS_AS(catalog("nope", {}), UnknownForm);
    CHECK_THROWS_AS(catalog("gl", {"x"}), ParseError);
    CHECK_THROWS_AS(catalog("split", {"A", "1"}), ParseError);
    CHECK_THROWS_AS(catalog("split", {"H", "1", "sc"}), InvalidType);
    CHECK_THROWS_AS(catalog("su", {"1", "0"}), InvalidType);
  }
}

TEST_CASE("catalog spec strings parse with either separator") {
  CHECK_NOTHROW(parse_catalog_spec("split/A/3/adjoint"));
  CHECK_NOTHROW(parse_catalog_spec("compact/E6/sc"));
  CHECK_NOTHROW(parse_catalog_spec("gl/4"));
  CHECK_NOTHROW(parse_catalog_spec("u/2/1"));
  CHECK_NOTHROW(parse_catalog_spec("so/2,3"));
  CHECK_NOTHROW(parse_catalog_spec("sp2n_r/3"));
  CHECK_THROWS_AS(parse_catalog_spec(""), ParseError);
  CHECK_THROWS_AS(parse_catalog_spec("so/2"), ParseError);
}

TEST_CASE("downstream pi0 is invariant under unimodular transport") {
  testing::Rng rng;
  const char* specs[] = {"gl/3", "so/2/3", "u/2/1", "split/A/2/adjoint",
                         "sp2n_r/2"};
  for (const char* spec : specs) {
    auto [d, f] = parse_catalog_spec(spec);
    FiniteAbelianGroup base = pi0(d, f).group;
    for (int t = 0; t < 10; ++t) {
      IntMatrix U = testing::random_unimodular(rng, d.rank);
      auto [dd, ff] = testing::transport(d, f, U);
      CHECK(pi0(dd, ff).group == base);
    }
  }
}

TEST_CASE("random forms for a fixed datum are valid involutions") {
  testing::Rng rng;
  RootDatum data[] = {simple_sc(SimpleType::B, 3), simple_adjoint(SimpleType::A, 3),
                      gl(4), torus(2)};
  for (const RootDatum& d : data)
    for (int t = 0; t < 25; ++t) {
      RealFormSpec f = testing::random_form_for_datum(rng, d);
      CHECK_NOTHROW(validate_form(d, f));
    }
}
