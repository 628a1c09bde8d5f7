// Reproducible fuzz utilities shared by the unit and acceptance suites.
// The default seed is fixed; set the PI0_SEED environment variable to an
// unsigned integer to explore a different deterministic stream.

#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "rcg/pi0_engine.hpp"

namespace rcg::testing {

std::uint64_t default_seed();

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed = default_seed()) : engine(seed) {}
  long uniform(long lo, long hi);  // inclusive
};

// Product of random elementary row/column operations on the identity.
IntMatrix random_unimodular(Rng& rng, Index n, int steps = -1);

// Random involution lattice: a block-diagonal sum of [1], [-1] and the
// two-dimensional swap, conjugated by a random unimodular matrix.
GammaLattice random_involution_lattice(Rng& rng, Index rank);

// Random valid Galois involution for a fixed datum: a Weyl-group
// involution times a global sign.
RealFormSpec random_form_for_datum(Rng& rng, const RootDatum& d);

// Unimodular transport of a (datum, form) pair: coroots map by U, roots
// by the inverse transpose, theta by conjugation.
std::pair<RootDatum, RealFormSpec> transport(const RootDatum& d,
                                             const RealFormSpec& f,
                                             const IntMatrix& U);

// Random block product of catalog entries (optionally transported).
std::pair<RootDatum, RealFormSpec> random_catalog_product(Rng& rng,
                                                          int max_blocks = 3,
                                                          bool transported = true);

// Block-diagonal form for a product datum.
RealFormSpec product_form(const RealFormSpec& f1, const RealFormSpec& f2);

}  // namespace rcg::testing
