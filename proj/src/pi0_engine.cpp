#include "rcg/pi0_engine.hpp"

#include <sstream>
#include <utility>

namespace rcg {

namespace {

Pi0Result from_quotient(QuotientGenerators q, Pi0Path path) {
  if (!q.group.is_elementary_2())
    throw InternalInconsistency("pi0 computed a non-elementary-2 group: " +
                                q.group.to_text());
  return Pi0Result{std::move(q.group), std::move(q.torsion_generators), path};
}

}  // namespace

Pi0Result pi0_torus(const GammaLattice& L) {
  TateH0Result t = tate_h0(L);
  return Pi0Result{std::move(t.group), std::move(t.witnesses), Pi0Path::torus};
}

Pi0Result pi0_invariant_quotient(const RootDatum& d, const RealFormSpec& f) {
  GammaLattice L = cocharacter_lattice(d, f);
  IntMatrix inv = invariants(L);
  IntMatrix R = coroot_embedding(d).matrix;
  // Subgroup generated by all nu + theta nu and all images of sc
  // cocharacters; it need not consist of invariants, so cut it down by an
  // honest lattice intersection.
  IntMatrix denom_ambient = lattice_sum(norm_sublattice(L), R);
  IntMatrix denom = lattice_intersect(denom_ambient, inv);
  return from_quotient(quotient_rel_with_generators(inv, denom),
                       Pi0Path::invariant_quotient);
}

Pi0Result pi0_torus_cokernel(const RootDatum& d, const RealFormSpec& f) {
  GammaLattice L = cocharacter_lattice(d, f);
  GammaLattice Lsc = restrict_to_sc(d, f);
  IntMatrix R = coroot_embedding(d).matrix;
  IntMatrix denom =
      lattice_sum(norm_sublattice(L), IntMatrix(R * invariants(Lsc)));
  return from_quotient(quotient_rel_with_generators(invariants(L), denom),
                       Pi0Path::torus_cokernel);
}

Pi0Result pi0(const RootDatum& d, const RealFormSpec& f) {
  Pi0Result a = pi0_invariant_quotient(d, f);
  Pi0Result b = pi0_torus_cokernel(d, f);
  if (!(a.group == b.group)) {
    std::ostringstream os;
    os << "the two pi0 routes disagree: invariant-quotient gives "
       << a.group.to_text() << ", torus-cokernel gives " << b.group.to_text();
    throw InternalInconsistency(os.str());
  }
  return b;
}

Pi1Result pi1_alg(const RootDatum& d, const RealFormSpec& f) {
  const Index n = d.rank;
  IntMatrix R = coroot_embedding(d).matrix;
  // theta stabilizes the coroot lattice, so it descends to the quotient.
  if (!solve_integer_matrix(R, IntMatrix(f.theta * R)))
    throw InternalInconsistency("theta does not stabilize the coroot lattice");

  SmithForm s = snf(R);
  const Index r = s.rank();
  Pi1Result out;
  out.group.free_rank = n - r;
  std::vector<Index> kept;
  for (Index i = 0; i < r; ++i)
    if (s.D(i, i) >= 2) {
      out.group.invariant_factors.push_back(s.D(i, i));
      kept.push_back(i);
    }
  for (Index i = r; i < n; ++i) kept.push_back(i);

  // In the coordinates x -> U x the quotient splits off Z/d_i at torsion
  // coordinates and Z at free ones; coordinates with d_i = 1 vanish, so
  // the action restricted to the kept coordinates is exact.
  IntMatrix Uinv = unimodular_inverse(s.U);
  IntMatrix T = s.U * f.theta * Uinv;
  const Index k = static_cast<Index>(kept.size());
  out.gamma_action.resize(k, k);
  out.generator_orders.resize(static_cast<size_t>(k));
  for (Index a = 0; a < k; ++a) {
    Int order = kept[static_cast<size_t>(a)] < r
                    ? Int(s.D(kept[static_cast<size_t>(a)], kept[static_cast<size_t>(a)]))
                    : Int(0);
    out.generator_orders[static_cast<size_t>(a)] = order;
    for (Index b = 0; b < k; ++b) {
      Int entry = T(kept[static_cast<size_t>(a)], kept[static_cast<size_t>(b)]);
      if (order != 0) {
        mpz_fdiv_r(entry.get_mpz_t(), entry.get_mpz_t(), order.get_mpz_t());
      }
      out.gamma_action(a, b) = entry;
    }
  }
  return out;
}

FiniteAbelianGroup h0_pi1(const RootDatum& d, const RealFormSpec& f) {
  const Index n = d.rank;
  IntMatrix R = coroot_embedding(d).matrix;
  IntMatrix id = IntMatrix::Identity(n, n);
  // Invariant classes: x with (theta - 1)x in the coroot lattice.
  IntMatrix constraint(n, n + R.cols());
  constraint.leftCols(n) = f.theta - id;
  constraint.rightCols(R.cols()) = -R;
  IntMatrix K = kernel_saturated(constraint);
  IntMatrix P = hnf_basis(K.topRows(n));
  // Norm classes plus relations.
  IntMatrix denom = lattice_sum(hnf_basis(f.theta + id), R);
  return quotient_structure_rel(P, denom);
}

CheckReport check_simply_connected_trivial(const RootDatum& d,
                                           const RealFormSpec& f) {
  CheckReport rep;
  rep.applicable = is_simply_connected(d);
  if (!rep.applicable) {
    rep.message = "skipped: datum is not simply connected";
    return rep;
  }
  Pi0Result r = pi0(d, f);
  rep.passed = r.group.trivial();
  rep.message = rep.passed ? "pi0 trivial as required"
                           : "pi0 = " + r.group.to_text() +
                                 " for a simply connected datum";
  return rep;
}

CheckReport check_split_rank_bound(const RootDatum& d, const RealFormSpec& f) {
  CheckReport rep;
  rep.applicable = true;
  Pi0Result r = pi0(d, f);
  Index n = static_cast<Index>(r.group.invariant_factors.size());
  Index rr = real_rank(d, f);
  rep.passed = r.group.is_elementary_2() && n <= rr;
  std::ostringstream os;
  os << "pi0 = " << r.group.to_text() << ", real rank " << rr;
  rep.message = os.str();
  return rep;
}

}  // namespace rcg
