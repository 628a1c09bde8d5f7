#include "rcg/testing.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

namespace rcg::testing {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PI0_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the fixed seed
    }
  }
  return 0x5eed0c0de2024ULL;
}

long Rng::uniform(long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(engine);
}

IntMatrix random_unimodular(Rng& rng, Index n, int steps) {
  IntMatrix U = IntMatrix::Identity(n, n);
  if (n == 0) return U;
  if (steps < 0) steps = static_cast<int>(2 * n + 4);
  for (int s = 0; s < steps; ++s) {
    Index i = rng.uniform(0, n - 1);
    Index j = rng.uniform(0, n - 1);
    switch (rng.uniform(0, 2)) {
      case 0:
        if (i != j) U.col(i) += Int(rng.uniform(-2, 2)) * U.col(j);
        break;
      case 1:
        if (i != j) U.row(i) += Int(rng.uniform(-2, 2)) * U.row(j);
        break;
      default:
        U.col(i) = -U.col(i);
        break;
    }
  }
  return U;
}

GammaLattice random_involution_lattice(Rng& rng, Index rank) {
  IntMatrix g = IntMatrix::Zero(rank, rank);
  Index at = 0;
  while (at < rank) {
    int pick = rng.uniform(0, 2);
    if (pick == 2 && at + 2 <= rank) {
      g(at, at + 1) = 1;
      g(at + 1, at) = 1;
      at += 2;
    } else {
      g(at, at) = pick == 1 ? -1 : 1;
      at += 1;
    }
  }
  IntMatrix U = random_unimodular(rng, rank);
  return base_change(GammaLattice(std::move(g)), U);
}

RealFormSpec random_form_for_datum(Rng& rng, const RootDatum& d) {
  // Every involution in a finite reflection group is a product of
  // reflections through mutually orthogonal roots; assembling one directly
  // (times a global sign) needs no rejection loop.
  const Index n = d.rank;
  const Index m = d.num_roots();
  IntMatrix theta = IntMatrix::Identity(n, n);
  if (m > 0) {
    std::vector<Index> order(static_cast<size_t>(m));
    for (Index i = 0; i < m; ++i) order[static_cast<size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng.engine);
    std::vector<Index> chosen;
    const long want = rng.uniform(0, std::min<long>(n, 4));
    for (Index idx : order) {
      if (static_cast<long>(chosen.size()) >= want) break;
      bool orthogonal = true;
      for (Index c : chosen)
        if (sign(dot(d.roots.col(idx), d.coroots.col(c))) != 0 ||
            sign(dot(d.roots.col(c), d.coroots.col(idx))) != 0) {
          orthogonal = false;
          break;
        }
      if (orthogonal) chosen.push_back(idx);
    }
    for (Index c : chosen) {
      // s_c on cocharacters: x -> x - <alpha_c, x> alpha_c^vee.
      IntMatrix refl = IntMatrix::Identity(n, n) -
                       d.coroots.col(c) * d.roots.col(c).transpose();
      theta = IntMatrix(refl * theta);
    }
  }
  if (rng.uniform(0, 1) == 1) theta = -theta;
  RealFormSpec f{std::move(theta), "fuzz"};
  validate_form(d, f);
  return f;
}

RealFormSpec product_form(const RealFormSpec& f1, const RealFormSpec& f2) {
  const Index n1 = f1.theta.rows();
  const Index n2 = f2.theta.rows();
  IntMatrix theta = IntMatrix::Zero(n1 + n2, n1 + n2);
  theta.topLeftCorner(n1, n1) = f1.theta;
  theta.bottomRightCorner(n2, n2) = f2.theta;
  return RealFormSpec{std::move(theta), f1.name + " x " + f2.name};
}

std::pair<RootDatum, RealFormSpec> transport(const RootDatum& d,
                                             const RealFormSpec& f,
                                             const IntMatrix& U) {
  IntMatrix Uinv = unimodular_inverse(U);
  RootDatum moved;
  moved.rank = d.rank;
  moved.coroots = U * d.coroots;
  moved.roots = Uinv.transpose() * d.roots;
  moved.simple_indices = d.simple_indices;
  moved = validate(std::move(moved));
  RealFormSpec g{IntMatrix(U * f.theta * Uinv), f.name + " (transported)"};
  validate_form(moved, g);
  return {std::move(moved), std::move(g)};
}

std::pair<RootDatum, RealFormSpec> random_catalog_product(Rng& rng,
                                                          int max_blocks,
                                                          bool transported) {
  int blocks = static_cast<int>(rng.uniform(1, max_blocks));
  RootDatum d = torus(0);
  RealFormSpec f{IntMatrix(0, 0), "product"};
  for (int b = 0; b < blocks; ++b) {
    std::pair<RootDatum, RealFormSpec> part = [&] {
      switch (rng.uniform(0, 7)) {
        case 0: return catalog("torus", {std::to_string(rng.uniform(1, 3))});
        case 1: return catalog("gl", {std::to_string(rng.uniform(1, 4))});
        case 2:
          return catalog("u", {std::to_string(rng.uniform(0, 2)),
                               std::to_string(rng.uniform(1, 2))});
        case 3:
          return catalog("so", {std::to_string(rng.uniform(1, 3)),
                                std::to_string(rng.uniform(1, 3))});
        case 4: return catalog("sp2n_r", {std::to_string(rng.uniform(1, 3))});
        case 5: {
          const char* types[] = {"A", "B", "C", "D"};
          long rk = rng.uniform(1, 3);
          std::string ty = types[rng.uniform(0, 3)];
          if (ty == "D") rk += 1;  // D needs rank >= 2
          return catalog(rng.uniform(0, 1) ? "split" : "compact",
                         {ty, std::to_string(rk),
                          rng.uniform(0, 1) ? "sc" : "adjoint"});
        }
        case 6:
          return catalog("su", {std::to_string(rng.uniform(1, 2)),
                                std::to_string(rng.uniform(1, 2))});
        default: {
          RootDatum dd = torus(rng.uniform(1, 2));
          IntMatrix th = -IntMatrix::Identity(dd.rank, dd.rank);
          return std::pair<RootDatum, RealFormSpec>{
              std::move(dd), RealFormSpec{std::move(th), "compact torus"}};
        }
      }
    }();
    f = product_form(f, part.second);
    d = product(d, part.first);
  }
  if (transported) {
    IntMatrix U = random_unimodular(rng, d.rank);
    return transport(d, f, U);
  }
  validate_form(d, f);
  return {std::move(d), std::move(f)};
}

}  // namespace rcg::testing
