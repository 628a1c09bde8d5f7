// Galois involutions on a cocharacter lattice (for a maximal torus that
// contains a maximal split torus), their validation against a root datum,
// and a catalog of named real forms of the classical constructions.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rcg/gamma_lattice.hpp"
#include "rcg/root_datum.hpp"

namespace rcg {

struct RealFormSpec {
  IntMatrix theta;   // rank x rank involution on X_*(T)
  std::string name;  // optional label
};

// theta^2 = 1, theta permutes the coroot set, and theta restricts to an
// integral involution on the simple-coroot lattice. Throws NotInvolution,
// CorootSetNotStable or NoIntegralRestriction.
void validate_form(const RootDatum& d, const RealFormSpec& f);

// X_*(T) with its Galois action, as a GammaLattice.
GammaLattice cocharacter_lattice(const RootDatum& d, const RealFormSpec& f);

// The induced involution on X_*(T^sc) in the simple-coroot basis: the
// unique integer matrix X with R X = theta R for R the coroot embedding.
GammaLattice restrict_to_sc(const RootDatum& d, const RealFormSpec& f);

// Dimension of the maximal split subtorus: rank of the saturated
// invariant sublattice of theta.
Index real_rank(const RootDatum& d, const RealFormSpec& f);

struct CatalogDescription {
  std::string name;
  std::string grammar;
  std::string summary;
};

std::vector<CatalogDescription> catalog_entries();

// Named entries; params are the slash-separated tokens after the name.
//   split/<type>/<rank>/<sc|adjoint>   theta = +1
//   compact/<type>/<rank>/<sc|adjoint> theta = -1
//   gl/<n>                             GL(n,R)
//   u/<p>/<q>, su/<p>/<q>              (special) unitary groups
//   so/<p>/<q>                         (special) orthogonal groups
//   sp2n_r/<n>                         Sp(2n,R)
//   torus/<n>                          split torus
// Throws UnknownForm / InvalidType / ParseError; validation errors propagate.
std::pair<RootDatum, RealFormSpec> catalog(const std::string& name,
                                           const std::vector<std::string>& params);

// "name/p1/p2" or "name/p1,p2" -> catalog lookup.
std::pair<RootDatum, RealFormSpec> parse_catalog_spec(const std::string& spec);

}  // namespace rcg
