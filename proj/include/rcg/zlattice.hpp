// Exact integer matrix algebra: Smith and Hermite normal forms, kernels,
// sublattice arithmetic, and invariant-factor structure of lattice quotients.
//
// Conventions, fixed repo-wide:
//   * a matrix acts on column vectors;
//   * the columns of a "basis matrix" generate a sublattice of Z^rows;
//   * canonical bases are column-style Hermite normal forms (pivot rows
//     strictly increasing, pivots positive, entries left of a pivot in its
//     row reduced into [0, pivot)), so two sublattices are equal iff their
//     canonical basis matrices are equal.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcg/errors.hpp"
#include "rcg/int_matrix.hpp"

namespace rcg {

// U * A * V = D with U, V unimodular and D = diag(d1, ..., dr, 0, ...),
// di >= 0 and di | di+1.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  Index rank() const;
  std::vector<Int> diagonal() const;
};

// H = A * U with U unimodular; nonzero columns of H are the canonical
// basis of the column lattice of A, zero columns trail.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  Index rank = 0;
};

// Invariant-factor presentation of a finitely generated abelian group:
// Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.
struct FiniteAbelianGroup {
  Index free_rank = 0;
  std::vector<Int> invariant_factors;

  bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool is_elementary_2() const;
  Int torsion_order() const;
  bool operator==(const FiniteAbelianGroup&) const = default;

  // "trivial", "(Z/2)^n", or "Z^r x Z/d1 x ..." in the general case.
  std::string to_text() const;
};

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a,
                              const FiniteAbelianGroup& b);

SmithForm snf(const IntMatrix& A);
HermiteForm hnf(const IntMatrix& A);

// Nonzero columns of hnf(A).H: the canonical basis of the column lattice.
IntMatrix hnf_basis(const IntMatrix& A);

// Exact determinant (Bareiss fraction-free elimination); square input.
Int determinant(const IntMatrix& A);
bool is_unimodular(const IntMatrix& A);

// Exact integral inverse of a unimodular matrix. Throws NotUnimodular.
IntMatrix unimodular_inverse(const IntMatrix& U);

// Rank over Q (rational Gaussian elimination; independent of snf/hnf).
Index rank_rational(const IntMatrix& A);
// Rank of A mod 2 over the field with two elements.
Index rank_mod2(const IntMatrix& A);

// Canonical basis of {x in Z^cols : A x = 0}; always saturated.
IntMatrix kernel_saturated(const IntMatrix& A);

// Canonical basis of the sublattice generated by the columns of both.
IntMatrix lattice_sum(const IntMatrix& B1, const IntMatrix& B2);
// Canonical basis of the intersection of the two column lattices.
IntMatrix lattice_intersect(const IntMatrix& B1, const IntMatrix& B2);

// Some x with A x = b over Z, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b);
// Columnwise: X with A X = B, if one exists.
std::optional<IntMatrix> solve_integer_matrix(const IntMatrix& A,
                                              const IntMatrix& B);

bool lattice_contains(const IntMatrix& B, const IntVector& v);

// Structure of Z^ambient_rank / (column lattice of S).
FiniteAbelianGroup quotient_structure(Index ambient_rank, const IntMatrix& S);

// Structure of L / S for sublattices S <= L of a common ambient lattice.
// Throws NotContained if some column of S lies outside the lattice of L.
FiniteAbelianGroup quotient_structure_rel(const IntMatrix& L,
                                          const IntMatrix& S);

// Quotient structure together with ambient-coordinate representatives
// generating the torsion factors (column i generates factor i).
struct QuotientGenerators {
  FiniteAbelianGroup group;
  IntMatrix torsion_generators;
};

QuotientGenerators quotient_with_generators(Index ambient_rank,
                                            const IntMatrix& S);
QuotientGenerators quotient_rel_with_generators(const IntMatrix& L,
                                                const IntMatrix& S);

}  // namespace rcg
