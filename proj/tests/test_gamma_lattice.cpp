#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rcg/gamma_lattice.hpp"
#include "rcg/testing.hpp"

using namespace rcg;

namespace {

GammaLattice split_lattice(Index d) {
  return GammaLattice(IntMatrix::Identity(d, d));
}

GammaLattice compact_lattice(Index d) {
  return GammaLattice(IntMatrix(-IntMatrix::Identity(d, d)));
}

GammaLattice swap_lattice() {
  return GammaLattice(mat_from_rows({{0, 1}, {1, 0}}));
}

}  // namespace

TEST_CASE("construction rejects non-involutions") {
  CHECK_THROWS_AS(GammaLattice(mat_from_rows({{0, 2}, {0, 1}})), NotInvolution);
  CHECK_THROWS_AS(GammaLattice(mat_from_rows({{1, 0}})), NotInvolution);
  CHECK_NOTHROW(GammaLattice(IntMatrix(0, 0)));
}

TEST_CASE("invariants and norms on the three indecomposables") {
  SUBCASE("trivial action") {
    CHECK(equal(invariants(split_lattice(3)), IntMatrix::Identity(3, 3)));
    CHECK(equal(norm_sublattice(split_lattice(3)),
                IntMatrix(2 * IntMatrix::Identity(3, 3))));
  }
  SUBCASE("sign action") {
    CHECK(invariants(compact_lattice(1)).cols() == 0);
    CHECK(norm_sublattice(compact_lattice(1)).cols() == 0);
  }
  SUBCASE("swap action") {
    CHECK(equal(invariants(swap_lattice()), mat_from_rows({{1}, {1}})));
    CHECK(equal(norm_sublattice(swap_lattice()), mat_from_rows({{1}, {1}})));
  }
}

TEST_CASE("tate h0 on pinned examples") {
  SUBCASE("split of rank d is (Z/2)^d with basis witnesses") {
    for (Index d = 0; d <= 4; ++d) {
      TateH0Result t = tate_h0(split_lattice(d));
      CHECK(t.group.free_rank == 0);
      CHECK(static_cast<Index>(t.group.invariant_factors.size()) == d);
      CHECK(t.group.is_elementary_2());
      CHECK(t.witnesses.cols() == d);
    }
  }
  SUBCASE("sign action has no invariants") {
    CHECK(tate_h0(compact_lattice(1)).group.trivial());
    CHECK(tate_h0(compact_lattice(5)).group.trivial());
  }
  SUBCASE("swap action: invariants equal norms") {
    CHECK(tate_h0(swap_lattice()).group.trivial());
  }
}

TEST_CASE("witnesses are invariant, nontrivial, and generate") {
  testing::Rng rng;
  for (int t = 0; t < 120; ++t) {
    GammaLattice L = testing::random_involution_lattice(rng, rng.uniform(0, 8));
    TateH0Result res = tate_h0(L);
    IntMatrix inv = invariants(L);
    IntMatrix norm = norm_sublattice(L);
    CHECK(static_cast<Index>(res.group.invariant_factors.size()) ==
          res.witnesses.cols());
    for (Index j = 0; j < res.witnesses.cols(); ++j) {
      IntVector w = res.witnesses.col(j);
      CHECK(equal(IntMatrix(L.gamma * w), IntMatrix(w)));
      CHECK_FALSE(lattice_contains(norm, w));  // class is nonzero
    }
    // together with the norms the witnesses generate the invariants
    CHECK(quotient_structure_rel(inv, lattice_sum(norm, res.witnesses)).trivial());
  }
}

TEST_CASE("number of factors matches the rank oracle") {
  // trivial / sign / swap summands: only trivial ones contribute to H^0,
  // and the oracle counts them as rank_Q ker(gamma-1) - rank_F2(gamma+1).
  SUBCASE("pinned") {
    CHECK(h0_rank_oracle(split_lattice(4)) == 4);
    CHECK(h0_rank_oracle(swap_lattice()) == 0);
    CHECK(h0_rank_oracle(GammaLattice(mat_from_rows({{1, 0}, {0, -1}}))) == 1);
  }
  SUBCASE("fuzzed") {
    testing::Rng rng;
    for (int t = 0; t < 400; ++t) {
      GammaLattice L = testing::random_involution_lattice(rng, rng.uniform(0, 8));
      TateH0Result res = tate_h0(L);
      CHECK(static_cast<Index>(res.group.invariant_factors.size()) ==
            h0_rank_oracle(L));
    }
  }
}

TEST_CASE("tate h0 is a base-change invariant") {
  testing::Rng rng;
  for (int t = 0; t < 100; ++t) {
    GammaLattice L = testing::random_involution_lattice(rng, rng.uniform(0, 6));
    IntMatrix U = testing::random_unimodular(rng, L.rank);
    GammaLattice M = base_change(L, U);
    CHECK(tate_h0(L).group == tate_h0(M).group);
  }
  SUBCASE("identity base change is a no-op") {
    GammaLattice L = swap_lattice();
    CHECK(equal(base_change(L, IntMatrix::Identity(2, 2)).gamma, L.gamma));
  }
  SUBCASE("pinned conjugate of the swap") {
    GammaLattice L = swap_lattice();
    IntMatrix U = mat_from_rows({{1, 1}, {0, 1}});
    GammaLattice M = base_change(L, U);
    CHECK_FALSE(equal(M.gamma, L.gamma));
    CHECK(tate_h0(M).group == tate_h0(L).group);
  }
  SUBCASE("non-unimodular base change is rejected") {
    CHECK_THROWS_AS(base_change(swap_lattice(), mat_from_rows({{2, 0}, {0, 1}})),
                    NotUnimodular);
  }
}

TEST_CASE("tate h0 adds over direct sums") {
  SUBCASE("pinned") {
    GammaLattice s1 = split_lattice(1);
    CHECK(tate_h0(direct_sum(s1, s1)).group.invariant_factors ==
          std::vector<Int>{2, 2});
    CHECK(tate_h0(direct_sum(s1, compact_lattice(1))).group.invariant_factors ==
          std::vector<Int>{2});
    CHECK(equal(direct_sum(split_lattice(0), swap_lattice()).gamma,
                swap_lattice().gamma));
  }
  SUBCASE("fuzzed") {
    testing::Rng rng;
    for (int t = 0; t < 80; ++t) {
      GammaLattice a = testing::random_involution_lattice(rng, rng.uniform(0, 4));
      GammaLattice b = testing::random_involution_lattice(rng, rng.uniform(0, 4));
      FiniteAbelianGroup expect =
          direct_sum(tate_h0(a).group, tate_h0(b).group);
      CHECK(tate_h0(direct_sum(a, b)).group == expect);
    }
  }
}

TEST_CASE("tate h0 agrees with coset enumeration in low rank") {
  testing::Rng rng;
  for (int t = 0; t < 120; ++t) {
    GammaLattice L = testing::random_involution_lattice(rng, rng.uniform(1, 3));
    IntMatrix inv = invariants(L);
    IntMatrix norm = norm_sublattice(L);
    TateH0Result res = tate_h0(L);
    if (inv.cols() == 0) {
      CHECK(res.group.trivial());
      continue;
    }
    auto X = solve_integer_matrix(inv, norm);
    REQUIRE(X.has_value());
    oracles::CosetCounts counts = oracles::enumerate_cosets(*X, 4);
    CHECK(res.group.torsion_order() == counts.total);
    for (const auto& [m, killed] : counts.killed)
      CHECK(oracles::predicted_killed(res.group.invariant_factors, m) == killed);
  }
}
