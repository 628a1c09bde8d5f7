// Component groups of real reductive groups from exact lattice algebra.
//
// Two independent routes to pi0 G(R), both driven by the Galois involution
// theta on X_*(T) for a maximal torus containing a maximal split torus:
//
//   * invariant-quotient route: X_*(T)^Gamma divided by the intersection
//     of ((1+theta) X_*(T) + coroot lattice) with X_*(T)^Gamma;
//   * torus-cokernel route: the cokernel of H^0(X_*(T^sc)) -> H^0(X_*(T))
//     computed as X_*(T)^Gamma / ((1+theta) X_*(T) + R * (X_*(T^sc))^Gamma).
//
// The facade runs both and refuses to answer if they disagree. Cocharacter
// witnesses nu realize the components as the cosets of nu(-1).

#pragma once

#include "rcg/real_form.hpp"

namespace rcg {

enum class Pi0Path { torus, invariant_quotient, torus_cokernel };

struct Pi0Result {
  FiniteAbelianGroup group;  // (Z/2)^n
  IntMatrix witnesses;       // rank x n, theta-fixed cocharacters
  Pi0Path path = Pi0Path::torus;
};

struct Pi1Result {
  FiniteAbelianGroup group;
  // Induced Galois action on the chosen generators (invariant-factor
  // generators first, then free generators); torsion rows reduced modulo
  // the generator order.
  IntMatrix gamma_action;
  std::vector<Int> generator_orders;  // 0 marks a free generator
};

struct CheckReport {
  bool applicable = false;
  bool passed = true;
  std::string message;
};

// pi0 of a torus: tate_h0 of its cocharacter lattice, witnesses included.
Pi0Result pi0_torus(const GammaLattice& L);

Pi0Result pi0_invariant_quotient(const RootDatum& d, const RealFormSpec& f);
Pi0Result pi0_torus_cokernel(const RootDatum& d, const RealFormSpec& f);

// Runs both routes; throws InternalInconsistency if they disagree.
// Returns the torus-cokernel result.
Pi0Result pi0(const RootDatum& d, const RealFormSpec& f);

// Algebraic fundamental group X_*(T) / (coroot lattice), with the induced
// Galois action on a generating set.
Pi1Result pi1_alg(const RootDatum& d, const RealFormSpec& f);

// H^0 of the (finitely generated, possibly torsion) Galois module pi1,
// computed on the free presentation Z^rank / (coroot lattice).
FiniteAbelianGroup h0_pi1(const RootDatum& d, const RealFormSpec& f);

// Simply connected groups have connected real points.
CheckReport check_simply_connected_trivial(const RootDatum& d,
                                           const RealFormSpec& f);

// pi0 is an elementary abelian 2-group of rank at most the real rank.
CheckReport check_split_rank_bound(const RootDatum& d, const RealFormSpec& f);

}  // namespace rcg
