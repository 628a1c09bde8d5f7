#include "rcg/root_datum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace rcg {

std::string to_string(SimpleType t) {
  switch (t) {
    case SimpleType::A: return "A";
    case SimpleType::B: return "B";
    case SimpleType::C: return "C";
    case SimpleType::D: return "D";
    case SimpleType::E: return "E";
    case SimpleType::F: return "F";
    case SimpleType::G: return "G";
  }
  return "?";
}

namespace {

using VecKey = std::vector<Int>;
using PairKey = std::pair<VecKey, VecKey>;  // (coroot, root)

VecKey key_of(const IntVector& v) {
  VecKey k(static_cast<size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) k[static_cast<size_t>(i)] = v(i);
  return k;
}

std::string describe_pair(const IntVector& root, const IntVector& coroot) {
  return "root " + format_vector(root) + " / coroot " + format_vector(coroot);
}

}  // namespace

IntMatrix cartan_matrix(SimpleType t, Index n) {
  auto chain = [](IntMatrix& M) {
    for (Index i = 0; i + 1 < M.rows(); ++i) {
      M(i, i + 1) = -1;
      M(i + 1, i) = -1;
    }
  };
  IntMatrix M;
  switch (t) {
    case SimpleType::A:
      if (n < 1) throw InvalidType("type A needs rank >= 1");
      M = 2 * IntMatrix::Identity(n, n);
      chain(M);
      return M;
    case SimpleType::B:
      // alpha_n short; <alpha_{n-1}, alpha_n^vee> = -2.
      if (n < 1) throw InvalidType("type B needs rank >= 1");
      M = 2 * IntMatrix::Identity(n, n);
      chain(M);
      if (n >= 2) M(n - 2, n - 1) = -2;
      return M;
    case SimpleType::C:
      // alpha_n long; <alpha_n, alpha_{n-1}^vee> = -2.
      if (n < 1) throw InvalidType("type C needs rank >= 1");
      M = 2 * IntMatrix::Identity(n, n);
      chain(M);
      if (n >= 2) M(n - 1, n - 2) = -2;
      return M;
    case SimpleType::D:
      if (n < 2) throw InvalidType("type D needs rank >= 2");
      M = 2 * IntMatrix::Identity(n, n);
      for (Index i = 0; i + 2 < n; ++i) {
        M(i, i + 1) = -1;
        M(i + 1, i) = -1;
      }
      if (n >= 3) {
        M(n - 3, n - 1) = -1;
        M(n - 1, n - 3) = -1;
      }
      return M;
    case SimpleType::E: {
      if (n < 6 || n > 8) throw InvalidType("type E needs rank 6, 7 or 8");
      M = 2 * IntMatrix::Identity(n, n);
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 hangs off node 4.
      std::vector<std::pair<Index, Index>> edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
      if (n >= 7) edges.push_back({5, 6});
      if (n == 8) edges.push_back({6, 7});
      for (auto [a, b] : edges) {
        M(a, b) = -1;
        M(b, a) = -1;
      }
      return M;
    }
    case SimpleType::F:
      if (n != 4) throw InvalidType("type F needs rank 4");
      M = 2 * IntMatrix::Identity(4, 4);
      chain(M);
      M(1, 2) = -2;  // alpha_2 long, alpha_3 short
      return M;
    case SimpleType::G:
      if (n != 2) throw InvalidType("type G needs rank 2");
      M = mat_from_rows({{2, -1}, {-3, 2}});
      return M;
  }
  throw InvalidType("unknown simple type");
}

namespace {

// Closure of the simple pairs under all simple reflections. Acting on
// cocharacters: s_i(x) = x - <alpha_i, x> alpha_i^vee; on characters:
// s_i(y) = y - <y, alpha_i^vee> alpha_i.
void reflection_closure(const IntMatrix& simple_roots,
                        const IntMatrix& simple_coroots,
                        IntMatrix& all_roots, IntMatrix& all_coroots) {
  const Index rank = simple_roots.rows();
  const Index s = simple_roots.cols();
  std::map<PairKey, Index> seen;
  std::vector<std::pair<IntVector, IntVector>> pairs;  // (root, coroot)
  auto add = [&](const IntVector& root, const IntVector& coroot) -> bool {
    PairKey k{key_of(coroot), key_of(root)};
    if (seen.count(k)) return false;
    seen.emplace(std::move(k), static_cast<Index>(pairs.size()));
    pairs.emplace_back(root, coroot);
    return true;
  };
  for (Index i = 0; i < s; ++i)
    add(simple_roots.col(i), simple_coroots.col(i));
  for (size_t head = 0; head < pairs.size(); ++head) {
    for (Index i = 0; i < s; ++i) {
      IntVector root = pairs[head].first;
      IntVector coroot = pairs[head].second;
      Int a = dot(root, simple_coroots.col(i));
      Int b = dot(IntVector(simple_roots.col(i)), coroot);
      IntVector new_root = root - a * simple_roots.col(i);
      IntVector new_coroot = coroot - b * simple_coroots.col(i);
      add(new_root, new_coroot);
    }
  }
  all_roots.resize(rank, static_cast<Index>(pairs.size()));
  all_coroots.resize(rank, static_cast<Index>(pairs.size()));
  for (size_t j = 0; j < pairs.size(); ++j) {
    all_roots.col(static_cast<Index>(j)) = pairs[j].first;
    all_coroots.col(static_cast<Index>(j)) = pairs[j].second;
  }
}

RootDatum datum_from_simples(const IntMatrix& simple_roots,
                             const IntMatrix& simple_coroots) {
  RootDatum d;
  d.rank = simple_roots.rows();
  reflection_closure(simple_roots, simple_coroots, d.roots, d.coroots);
  // The simple pairs were inserted first.
  for (Index i = 0; i < simple_roots.cols(); ++i) d.simple_indices.push_back(i);
  return validate(std::move(d));
}

}  // namespace

RootDatum simple_sc(SimpleType t, Index rank) {
  IntMatrix M = cartan_matrix(t, rank);
  IntMatrix simple_coroots = IntMatrix::Identity(rank, rank);
  // <alpha_j, e_i> = M(j, i), so root j is row j of the Cartan matrix.
  IntMatrix simple_roots = M.transpose();
  return datum_from_simples(simple_roots, simple_coroots);
}

RootDatum simple_adjoint(SimpleType t, Index rank) {
  IntMatrix M = cartan_matrix(t, rank);
  IntMatrix simple_roots = IntMatrix::Identity(rank, rank);
  // <e_j, alpha_i^vee> = M(j, i), so coroot i is column i of the Cartan matrix.
  IntMatrix simple_coroots = M;
  return datum_from_simples(simple_roots, simple_coroots);
}

RootDatum gl(Index n) {
  if (n < 1) throw InvalidType("gl needs n >= 1");
  RootDatum d;
  d.rank = n;
  const Index m = n * (n - 1);
  d.coroots.resize(n, m);
  d.roots.resize(n, m);
  Index col = 0;
  std::map<PairKey, Index> where;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      IntVector v = IntVector::Zero(n);
      v(i) = 1;
      v(j) = -1;
      d.coroots.col(col) = v;
      d.roots.col(col) = v;
      where[{key_of(v), key_of(v)}] = col;
      ++col;
    }
  for (Index i = 0; i + 1 < n; ++i) {
    IntVector v = IntVector::Zero(n);
    v(i) = 1;
    v(i + 1) = -1;
    d.simple_indices.push_back(where.at({key_of(v), key_of(v)}));
  }
  return validate(std::move(d));
}

RootDatum torus(Index n) {
  if (n < 0) throw InvalidType("torus needs n >= 0");
  RootDatum d;
  d.rank = n;
  d.coroots = IntMatrix(n, 0);
  d.roots = IntMatrix(n, 0);
  return validate(std::move(d));
}

RootDatum product(const RootDatum& d1, const RootDatum& d2) {
  RootDatum d;
  d.rank = d1.rank + d2.rank;
  const Index m1 = d1.num_roots();
  const Index m2 = d2.num_roots();
  d.coroots = IntMatrix::Zero(d.rank, m1 + m2);
  d.roots = IntMatrix::Zero(d.rank, m1 + m2);
  d.coroots.block(0, 0, d1.rank, m1) = d1.coroots;
  d.roots.block(0, 0, d1.rank, m1) = d1.roots;
  d.coroots.block(d1.rank, m1, d2.rank, m2) = d2.coroots;
  d.roots.block(d1.rank, m1, d2.rank, m2) = d2.roots;
  for (Index i : d1.simple_indices) d.simple_indices.push_back(i);
  for (Index i : d2.simple_indices) d.simple_indices.push_back(i + m1);
  return validate(std::move(d));
}

RootDatum validate(RootDatum d) {
  const Index n = d.rank;
  if (n < 0) throw AxiomViolation("negative rank");
  if (d.coroots.rows() != n || d.roots.rows() != n)
    throw AxiomViolation("roots/coroots do not live in rank-" +
                         std::to_string(n) + " lattice");
  if (d.coroots.cols() != d.roots.cols())
    throw AxiomViolation("roots and coroots must be paired bijectively");
  const Index m = d.coroots.cols();

  for (Index i : d.simple_indices)
    if (i < 0 || i >= m) throw AxiomViolation("simple index out of range");
  {
    std::set<Index> distinct(d.simple_indices.begin(), d.simple_indices.end());
    if (static_cast<Index>(distinct.size()) !=
        static_cast<Index>(d.simple_indices.size()))
      throw AxiomViolation("repeated simple index");
  }

  // Deduplicate exact (coroot, root) pairs and sort them canonically so
  // lattice-equal data compare equal fieldwise.
  std::vector<std::pair<PairKey, Index>> keyed;
  keyed.reserve(static_cast<size_t>(m));
  for (Index j = 0; j < m; ++j)
    keyed.push_back({{column_as_vector(d.coroots, j), column_as_vector(d.roots, j)}, j});
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  const Index mu = static_cast<Index>(keyed.size());

  std::map<VecKey, Index> by_coroot;
  std::map<VecKey, Index> by_root;
  std::map<PairKey, Index> by_pair;
  for (Index j = 0; j < mu; ++j) {
    const auto& [key, orig] = keyed[static_cast<size_t>(j)];
    if (!by_coroot.emplace(key.first, j).second)
      throw AxiomViolation("coroot appears twice with different roots");
    if (!by_root.emplace(key.second, j).second)
      throw AxiomViolation("root appears twice with different coroots");
    by_pair.emplace(key, j);
  }

  IntMatrix coroots(n, mu), roots(n, mu);
  for (Index j = 0; j < mu; ++j) {
    const auto& key = keyed[static_cast<size_t>(j)].first;
    for (Index i = 0; i < n; ++i) {
      coroots(i, j) = key.first[static_cast<size_t>(i)];
      roots(i, j) = key.second[static_cast<size_t>(i)];
    }
  }

  // Remap the base onto the sorted pairs, preserving its order (the
  // numbering of the simple roots is part of the datum).
  std::vector<Index> simple;
  std::set<Index> seen_simple;
  for (Index i : d.simple_indices) {
    PairKey k{column_as_vector(d.coroots, i), column_as_vector(d.roots, i)};
    Index pos = by_pair.at(k);
    if (!seen_simple.insert(pos).second)
      throw AxiomViolation("simple indices collapse under deduplication");
    simple.push_back(pos);
  }

  d.coroots = std::move(coroots);
  d.roots = std::move(roots);
  d.simple_indices = std::move(simple);

  // Pairing and +/- closure.
  for (Index j = 0; j < mu; ++j) {
    IntVector root = d.roots.col(j);
    IntVector coroot = d.coroots.col(j);
    if (dot(root, coroot) != 2)
      throw AxiomViolation("pairing <alpha, alpha^vee> != 2 for " +
                           describe_pair(root, coroot));
    PairKey neg{key_of(IntVector(-coroot)), key_of(IntVector(-root))};
    if (!by_pair.count(neg))
      throw AxiomViolation("missing negative of " + describe_pair(root, coroot));
  }

  // Closure of the pair set under every root reflection, acting
  // simultaneously on both sides.
  for (Index i = 0; i < mu; ++i) {
    IntVector ri = d.roots.col(i);
    IntVector ci = d.coroots.col(i);
    for (Index j = 0; j < mu; ++j) {
      IntVector rj = d.roots.col(j);
      IntVector cj = d.coroots.col(j);
      IntVector r_img = rj - dot(rj, ci) * ri;
      IntVector c_img = cj - dot(ri, cj) * ci;
      if (!by_pair.count({key_of(c_img), key_of(r_img)}))
        throw AxiomViolation("reflection through " + describe_pair(ri, ci) +
                             " moves " + describe_pair(rj, cj) +
                             " outside the datum");
    }
  }

  // Base axioms: simple coroots independent, every coroot (resp. root) an
  // integer combination of the simple ones with uniform sign.
  const Index s = d.semisimple_rank();
  if (s > 0 || mu > 0) {
    IntMatrix R(n, s), Rroots(n, s);
    for (Index k = 0; k < s; ++k) {
      R.col(k) = d.coroots.col(d.simple_indices[static_cast<size_t>(k)]);
      Rroots.col(k) = d.roots.col(d.simple_indices[static_cast<size_t>(k)]);
    }
    if (rank_rational(R) != s)
      throw AxiomViolation("simple coroots are linearly dependent");
    auto check_base = [&](const IntMatrix& base, const IntMatrix& all,
                          const char* side) {
      auto X = solve_integer_matrix(base, all);
      if (!X)
        throw AxiomViolation(std::string(side) +
                             " not in the span of the simple ones");
      for (Index j = 0; j < X->cols(); ++j) {
        bool has_pos = false, has_neg = false;
        for (Index i = 0; i < X->rows(); ++i) {
          if (sign((*X)(i, j)) > 0) has_pos = true;
          if (sign((*X)(i, j)) < 0) has_neg = true;
        }
        if (has_pos && has_neg)
          throw AxiomViolation(std::string(side) + " " +
                               format_vector(all.col(j)) +
                               " has mixed signs over the base");
      }
    };
    check_base(R, d.coroots, "coroot");
    check_base(Rroots, d.roots, "root");
  }

  return d;
}

CorootEmbedding coroot_embedding(const RootDatum& d) {
  const Index s = d.semisimple_rank();
  IntMatrix R(d.rank, s);
  for (Index k = 0; k < s; ++k)
    R.col(k) = d.coroots.col(d.simple_indices[static_cast<size_t>(k)]);
  return CorootEmbedding{std::move(R)};
}

bool is_simply_connected(const RootDatum& d) {
  if (d.semisimple_rank() != d.rank) return false;
  return is_unimodular(coroot_embedding(d).matrix);
}

bool equal(const RootDatum& a, const RootDatum& b) {
  return a.rank == b.rank && equal(a.coroots, b.coroots) &&
         equal(a.roots, b.roots) && a.simple_indices == b.simple_indices;
}

}  // namespace rcg
