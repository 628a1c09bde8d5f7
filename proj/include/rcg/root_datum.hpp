// Root data of connected reductive groups, on the cocharacter side:
// the lattice X_*(T) = Z^rank, the paired root/coroot sets, a chosen base
// of simple roots, and the embedding of the simply connected coroot
// lattice. Roots are stored as vectors in the dual basis, so the pairing
// <root, coroot> is the standard dot product.

#pragma once

#include <string>
#include <vector>

#include "rcg/zlattice.hpp"

namespace rcg {

enum class SimpleType { A, B, C, D, E, F, G };

std::string to_string(SimpleType t);

struct RootDatum {
  Index rank = 0;          // rank of X_*(T)
  IntMatrix coroots;       // rank x m, columns are the coroots
  IntMatrix roots;         // rank x m, column j pairs with coroot j
  std::vector<Index> simple_indices;  // positions of the simple pairs

  Index num_roots() const { return coroots.cols(); }
  Index semisimple_rank() const {
    return static_cast<Index>(simple_indices.size());
  }
};

// Columns are the simple coroots: the matrix of the map induced on
// cocharacter lattices by the simply connected cover of the derived
// group, written in the basis of simple coroots of X_*(T^sc).
struct CorootEmbedding {
  IntMatrix matrix;  // rank x semisimple_rank, full column rank
};

// Checks every root-datum axiom and returns the normalized datum
// (pairs deduplicated and sorted canonically, simple indices remapped).
// Throws AxiomViolation naming the failing pair.
RootDatum validate(RootDatum d);

// Cartan matrix in Bourbaki numbering; entry (i, j) = <alpha_i, alpha_j^vee>.
IntMatrix cartan_matrix(SimpleType t, Index rank);

// Simply connected datum: simple coroots are the standard basis vectors.
RootDatum simple_sc(SimpleType t, Index rank);
// Adjoint datum: simple roots are the standard basis vectors.
RootDatum simple_adjoint(SimpleType t, Index rank);

RootDatum gl(Index n);
RootDatum torus(Index n);
RootDatum product(const RootDatum& d1, const RootDatum& d2);

CorootEmbedding coroot_embedding(const RootDatum& d);

// True iff the simple coroots form a basis of X_*(T).
bool is_simply_connected(const RootDatum& d);

bool equal(const RootDatum& a, const RootDatum& b);

}  // namespace rcg
