#include "rcg/gamma_lattice.hpp"

#include <utility>

namespace rcg {

GammaLattice::GammaLattice(IntMatrix gamma_matrix)
    : rank(gamma_matrix.rows()), gamma(std::move(gamma_matrix)) {
  if (gamma.rows() != gamma.cols())
    throw NotInvolution("gamma must be square");
  if (!equal(gamma * gamma, IntMatrix::Identity(rank, rank)))
    throw NotInvolution("gamma^2 != identity");
}

IntMatrix invariants(const GammaLattice& L) {
  IntMatrix d = L.gamma - IntMatrix::Identity(L.rank, L.rank);
  return kernel_saturated(d);
}

IntMatrix norm_sublattice(const GammaLattice& L) {
  IntMatrix n = L.gamma + IntMatrix::Identity(L.rank, L.rank);
  return hnf_basis(n);
}

TateH0Result tate_h0(const GammaLattice& L) {
  // (1+gamma)A is fixed pointwise by gamma, so it sits inside A^gamma and
  // the relative quotient is well defined; 2a = (1+gamma)a for invariant a
  // forces exponent <= 2.
  QuotientGenerators q =
      quotient_rel_with_generators(invariants(L), norm_sublattice(L));
  if (!q.group.is_elementary_2())
    throw InternalInconsistency("tate_h0 produced a non-elementary-2 group: " +
                                q.group.to_text());
  return TateH0Result{q.group, q.torsion_generators};
}

Index h0_rank_oracle(const GammaLattice& L) {
  IntMatrix id = IntMatrix::Identity(L.rank, L.rank);
  Index inv_rank = L.rank - rank_rational(L.gamma - id);
  Index norm_rank_mod2 = rank_mod2(L.gamma + id);
  return inv_rank - norm_rank_mod2;
}

GammaLattice direct_sum(const GammaLattice& L1, const GammaLattice& L2) {
  IntMatrix g = IntMatrix::Zero(L1.rank + L2.rank, L1.rank + L2.rank);
  g.topLeftCorner(L1.rank, L1.rank) = L1.gamma;
  g.bottomRightCorner(L2.rank, L2.rank) = L2.gamma;
  return GammaLattice(std::move(g));
}

GammaLattice base_change(const GammaLattice& L, const IntMatrix& U) {
  if (U.rows() != L.rank || U.cols() != L.rank)
    throw DimensionMismatch("base change matrix has wrong size");
  IntMatrix Uinv = unimodular_inverse(U);  // throws NotUnimodular
  return GammaLattice(IntMatrix(Uinv * L.gamma * U));
}

}  // namespace rcg
