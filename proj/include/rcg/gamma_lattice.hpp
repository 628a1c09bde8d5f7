// Free Z-modules of finite rank with an involution: the action of the
// nontrivial element of Gal(C/R) on a cocharacter lattice, and the 0-th
// Tate cohomology A^gamma / (1+gamma)A it gives rise to.

#pragma once

#include "rcg/zlattice.hpp"

namespace rcg {

struct GammaLattice {
  Index rank = 0;
  IntMatrix gamma;  // rank x rank, gamma^2 = identity (checked)

  explicit GammaLattice(IntMatrix gamma_matrix);
};

// Invariants mod norms, plus invariant vectors whose classes generate the
// quotient (one witness per invariant factor; the choice is canonical for
// this implementation but not mathematically unique).
struct TateH0Result {
  FiniteAbelianGroup group;  // free rank 0, every factor equal to 2
  IntMatrix witnesses;       // rank x k, columns fixed by gamma
};

// Saturated basis of the invariant sublattice ker(gamma - 1).
IntMatrix invariants(const GammaLattice& L);

// Canonical basis of the norm sublattice (1 + gamma) Z^rank.
IntMatrix norm_sublattice(const GammaLattice& L);

TateH0Result tate_h0(const GammaLattice& L);

// Number of invariant factors of tate_h0, computed independently of the
// normal-form route: rank_Q ker(gamma - 1) - rank_F2 (gamma + 1 mod 2).
// (Involution lattices decompose into trivial / sign / two-dimensional
// regular summands; only trivial summands contribute to H^0, and the
// formula counts exactly those.)
Index h0_rank_oracle(const GammaLattice& L);

GammaLattice direct_sum(const GammaLattice& L1, const GammaLattice& L2);

// Conjugate the involution by a unimodular change of basis:
// gamma -> U^{-1} gamma U. Throws NotUnimodular.
GammaLattice base_change(const GammaLattice& L, const IntMatrix& U);

}  // namespace rcg
