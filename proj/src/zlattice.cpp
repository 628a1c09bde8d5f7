#include "rcg/zlattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace rcg {

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot of unequal lengths");
  Int s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

bool is_zero(const IntMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (sign(m(i, j)) != 0) return false;
  return true;
}

bool equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

IntMatrix mat_from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const Index m = static_cast<Index>(rows.size());
  const Index n = m == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMatrix a(m, n);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n)
      throw DimensionMismatch("ragged matrix literal");
    Index j = 0;
    for (long x : row) a(i, j++) = x;
    ++i;
  }
  return a;
}

IntVector vec_from(std::initializer_list<long> entries) {
  IntVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long x : entries) v(i++) = x;
  return v;
}

std::vector<Int> column_as_vector(const IntMatrix& m, Index j) {
  std::vector<Int> v(static_cast<size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) v[static_cast<size_t>(i)] = m(i, j);
  return v;
}

std::string format_vector(const IntVector& v) {
  std::ostringstream os;
  os << "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) os << ", ";
    os << v(i).get_str();
  }
  os << ")";
  return os.str();
}

Index SmithForm::rank() const {
  Index r = 0;
  const Index k = std::min(D.rows(), D.cols());
  while (r < k && sign(D(r, r)) != 0) ++r;
  return r;
}

std::vector<Int> SmithForm::diagonal() const {
  const Index k = std::min(D.rows(), D.cols());
  std::vector<Int> d(static_cast<size_t>(k));
  for (Index i = 0; i < k; ++i) d[static_cast<size_t>(i)] = D(i, i);
  return d;
}

bool FiniteAbelianGroup::is_elementary_2() const {
  if (free_rank != 0) return false;
  for (const Int& f : invariant_factors)
    if (f != 2) return false;
  return true;
}

Int FiniteAbelianGroup::torsion_order() const {
  Int n = 1;
  for (const Int& f : invariant_factors) n *= f;
  return n;
}

std::string FiniteAbelianGroup::to_text() const {
  if (trivial()) return "trivial";
  if (is_elementary_2())
    return "(Z/2)^" + std::to_string(invariant_factors.size());
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " x ";
    first = false;
  };
  if (free_rank == 1) {
    sep();
    os << "Z";
  } else if (free_rank > 1) {
    sep();
    os << "Z^" << free_rank;
  }
  for (const Int& f : invariant_factors) {
    sep();
    os << "Z/" << f.get_str();
  }
  return os.str();
}

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a,
                              const FiniteAbelianGroup& b) {
  const Index k = static_cast<Index>(a.invariant_factors.size() +
                                     b.invariant_factors.size());
  IntMatrix rel = IntMatrix::Zero(k, k);
  Index i = 0;
  for (const Int& f : a.invariant_factors) rel(i, i) = f, ++i;
  for (const Int& f : b.invariant_factors) rel(i, i) = f, ++i;
  FiniteAbelianGroup g = quotient_structure(k, rel);
  g.free_rank = a.free_rank + b.free_rank;
  return g;
}

SmithForm snf(const IntMatrix& A) {
  const Index m = A.rows();
  const Index n = A.cols();
  SmithForm f;
  f.U = IntMatrix::Identity(m, m);
  f.V = IntMatrix::Identity(n, n);
  f.D = A;
  IntMatrix& U = f.U;
  IntMatrix& D = f.D;
  IntMatrix& V = f.V;

  const Index steps = std::min(m, n);
  Index i = 0;
  while (i < steps) {
    // Smallest nonzero |entry| of the trailing block becomes the pivot.
    Index pr = -1, pc = -1;
    for (Index r = i; r < m; ++r)
      for (Index c = i; c < n; ++c)
        if (sign(D(r, c)) != 0 && (pr < 0 || abs_less(D(r, c), D(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr < 0) break;  // trailing block is zero
    if (pr != i) {
      D.row(i).swap(D.row(pr));
      U.row(i).swap(U.row(pr));
    }
    if (pc != i) {
      D.col(i).swap(D.col(pc));
      V.col(i).swap(V.col(pc));
    }

    bool dirty = false;
    for (Index r = i + 1; r < m; ++r) {
      if (sign(D(r, i)) == 0) continue;
      Int q = trunc_div(D(r, i), D(i, i));
      if (sign(q) != 0) {
        D.row(r) -= q * D.row(i);
        U.row(r) -= q * U.row(i);
      }
      if (sign(D(r, i)) != 0) dirty = true;
    }
    for (Index c = i + 1; c < n; ++c) {
      if (sign(D(i, c)) == 0) continue;
      Int q = trunc_div(D(i, c), D(i, i));
      if (sign(q) != 0) {
        D.col(c) -= q * D.col(i);
        V.col(c) -= q * V.col(i);
      }
      if (sign(D(i, c)) != 0) dirty = true;
    }
    if (dirty) continue;  // residues remain; re-pick a smaller pivot

    // Lone pivot. Pull in any entry it does not divide, else fix sign
    // and move on; the divisibility sweep is what yields d_i | d_{i+1}.
    Index br = -1;
    for (Index r = i + 1; r < m && br < 0; ++r)
      for (Index c = i + 1; c < n; ++c)
        if (!divides(D(i, i), D(r, c))) {
          br = r;
          break;
        }
    if (br >= 0) {
      D.row(i) += D.row(br);
      U.row(i) += U.row(br);
      continue;
    }
    if (sign(D(i, i)) < 0) {
      D.row(i) = -D.row(i);
      U.row(i) = -U.row(i);
    }
    ++i;
  }
  return f;
}

HermiteForm hnf(const IntMatrix& A) {
  const Index m = A.rows();
  const Index n = A.cols();
  HermiteForm f;
  f.H = A;
  f.U = IntMatrix::Identity(n, n);
  IntMatrix& H = f.H;
  IntMatrix& U = f.U;

  Index c = 0;  // next pivot column
  for (Index r = 0; r < m && c < n; ++r) {
    // Gcd-eliminate row r across columns >= c down to one positive pivot.
    for (;;) {
      Index best = -1;
      for (Index j = c; j < n; ++j)
        if (sign(H(r, j)) != 0 && (best < 0 || abs_less(H(r, j), H(r, best))))
          best = j;
      if (best < 0) break;  // row has no pivot among free columns
      if (best != c) {
        H.col(c).swap(H.col(best));
        U.col(c).swap(U.col(best));
      }
      if (sign(H(r, c)) < 0) {
        H.col(c) = -H.col(c);
        U.col(c) = -U.col(c);
      }
      bool done = true;
      for (Index j = c + 1; j < n; ++j) {
        if (sign(H(r, j)) == 0) continue;
        Int q = trunc_div(H(r, j), H(r, c));
        if (sign(q) != 0) {
          H.col(j) -= q * H.col(c);
          U.col(j) -= q * U.col(c);
        }
        if (sign(H(r, j)) != 0) done = false;
      }
      if (done) break;
    }
    if (sign(H(r, c)) == 0) continue;  // no pivot in this row

    // Reduce earlier pivot columns at row r into [0, pivot).
    for (Index k = 0; k < c; ++k) {
      Int q = floor_div(H(r, k), H(r, c));
      if (sign(q) != 0) {
        H.col(k) -= q * H.col(c);
        U.col(k) -= q * U.col(c);
      }
    }
    ++c;
  }
  f.rank = c;
  return f;
}

IntMatrix hnf_basis(const IntMatrix& A) {
  HermiteForm f = hnf(A);
  return f.H.leftCols(f.rank);
}

Int determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const Index n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Int prev = 1;
  int sgn = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (sign(M(k, k)) == 0) {
      Index p = -1;
      for (Index r = k + 1; r < n; ++r)
        if (sign(M(r, k)) != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      M.row(k).swap(M.row(p));
      sgn = -sgn;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        M(i, j) = exact_div(M(i, j) * M(k, k) - M(i, k) * M(k, j), prev);
      M(i, k) = 0;
    }
    prev = M(k, k);
  }
  Int d = M(n - 1, n - 1);
  if (sgn < 0) d = -d;
  return d;
}

bool is_unimodular(const IntMatrix& A) {
  if (A.rows() != A.cols()) return false;
  Int d = determinant(A);
  return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& U) {
  if (!is_unimodular(U)) throw NotUnimodular("matrix has |det| != 1");
  auto X = solve_integer_matrix(U, IntMatrix::Identity(U.rows(), U.rows()));
  if (!X) throw InternalInconsistency("unimodular matrix failed to invert over Z");
  return *X;
}

Index rank_rational(const IntMatrix& A) {
  const Index m = A.rows();
  const Index n = A.cols();
  std::vector<std::vector<mpq_class>> M(static_cast<size_t>(m),
                                        std::vector<mpq_class>(static_cast<size_t>(n)));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) M[i][j] = mpq_class(A(i, j));
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    Index p = -1;
    for (Index i = r; i < m; ++i)
      if (M[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(M[static_cast<size_t>(r)], M[static_cast<size_t>(p)]);
    for (Index i = r + 1; i < m; ++i) {
      if (M[i][c] == 0) continue;
      mpq_class t = M[i][c] / M[r][c];
      for (Index j = c; j < n; ++j) M[i][j] -= t * M[r][j];
    }
    ++r;
  }
  return r;
}

Index rank_mod2(const IntMatrix& A) {
  const Index m = A.rows();
  const Index n = A.cols();
  std::vector<std::vector<char>> M(static_cast<size_t>(m),
                                   std::vector<char>(static_cast<size_t>(n), 0));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) M[i][j] = is_odd(A(i, j)) ? 1 : 0;
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    Index p = -1;
    for (Index i = r; i < m; ++i)
      if (M[i][c]) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(M[static_cast<size_t>(r)], M[static_cast<size_t>(p)]);
    for (Index i = r + 1; i < m; ++i)
      if (M[i][c])
        for (Index j = c; j < n; ++j) M[i][j] ^= M[r][j];
    ++r;
  }
  return r;
}

IntMatrix kernel_saturated(const IntMatrix& A) {
  SmithForm f = snf(A);
  const Index r = f.rank();
  const Index n = A.cols();
  IntMatrix K = f.V.rightCols(n - r);
  return hnf_basis(K);
}

static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw DimensionMismatch("concatenating matrices with unequal row counts");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  m.leftCols(a.cols()) = a;
  m.rightCols(b.cols()) = b;
  return m;
}

IntMatrix lattice_sum(const IntMatrix& B1, const IntMatrix& B2) {
  return hnf_basis(hcat(B1, B2));
}

IntMatrix lattice_intersect(const IntMatrix& B1, const IntMatrix& B2) {
  if (B1.rows() != B2.rows())
    throw DimensionMismatch("intersecting lattices of unequal ambient rank");
  if (B1.cols() == 0 || B2.cols() == 0) return IntMatrix(B1.rows(), 0);
  IntMatrix K = kernel_saturated(hcat(B1, -B2));
  IntMatrix X = K.topRows(B1.cols());
  return hnf_basis(B1 * X);
}

std::optional<IntMatrix> solve_integer_matrix(const IntMatrix& A,
                                              const IntMatrix& B) {
  if (A.rows() != B.rows())
    throw DimensionMismatch("solve: row count of A and B differ");
  const Index m = A.rows();
  const Index n = A.cols();
  SmithForm f = snf(A);
  const Index r = f.rank();
  IntMatrix C = f.U * B;
  IntMatrix Y = IntMatrix::Zero(n, B.cols());
  for (Index j = 0; j < B.cols(); ++j) {
    for (Index i = 0; i < r; ++i) {
      if (!divides(f.D(i, i), C(i, j))) return std::nullopt;
      Y(i, j) = exact_div(C(i, j), f.D(i, i));
    }
    for (Index i = r; i < m; ++i)
      if (sign(C(i, j)) != 0) return std::nullopt;
  }
  return IntMatrix(f.V * Y);
}

std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b) {
  auto X = solve_integer_matrix(A, b);
  if (!X) return std::nullopt;
  return IntVector(X->col(0));
}

bool lattice_contains(const IntMatrix& B, const IntVector& v) {
  return solve_integer(B, v).has_value();
}

QuotientGenerators quotient_with_generators(Index ambient_rank,
                                            const IntMatrix& S) {
  QuotientGenerators out;
  out.torsion_generators = IntMatrix(ambient_rank, 0);
  if (S.cols() == 0) {
    out.group.free_rank = ambient_rank;
    return out;
  }
  if (S.rows() != ambient_rank)
    throw DimensionMismatch("quotient: generators live in the wrong ambient rank");
  SmithForm f = snf(S);
  const Index r = f.rank();
  out.group.free_rank = ambient_rank - r;
  std::vector<Index> torsion_idx;
  for (Index i = 0; i < r; ++i)
    if (f.D(i, i) >= 2) {
      out.group.invariant_factors.push_back(f.D(i, i));
      torsion_idx.push_back(i);
    }
  if (!torsion_idx.empty()) {
    IntMatrix Uinv = unimodular_inverse(f.U);
    out.torsion_generators.resize(ambient_rank,
                                  static_cast<Index>(torsion_idx.size()));
    for (size_t k = 0; k < torsion_idx.size(); ++k)
      out.torsion_generators.col(static_cast<Index>(k)) = Uinv.col(torsion_idx[k]);
  }
  return out;
}

QuotientGenerators quotient_rel_with_generators(const IntMatrix& L,
                                                const IntMatrix& S) {
  if (S.cols() > 0 && L.rows() != S.rows())
    throw DimensionMismatch("relative quotient: ambient ranks differ");
  IntMatrix B = hnf_basis(L);
  IntMatrix X(B.cols(), 0);
  if (S.cols() > 0) {
    auto sol = solve_integer_matrix(B, S);
    if (!sol)
      throw NotContained("some generator of S is outside the lattice of L");
    X = *sol;
  }
  QuotientGenerators q = quotient_with_generators(B.cols(), X);
  q.torsion_generators = IntMatrix(B * q.torsion_generators);
  return q;
}

FiniteAbelianGroup quotient_structure(Index ambient_rank, const IntMatrix& S) {
  if (S.cols() == 0) return FiniteAbelianGroup{ambient_rank, {}};
  if (S.rows() != ambient_rank)
    throw DimensionMismatch("quotient: generators live in the wrong ambient rank");
  SmithForm f = snf(S);
  FiniteAbelianGroup g;
  g.free_rank = ambient_rank - f.rank();
  for (Index i = 0; i < f.rank(); ++i)
    if (f.D(i, i) >= 2) g.invariant_factors.push_back(f.D(i, i));
  return g;
}

FiniteAbelianGroup quotient_structure_rel(const IntMatrix& L,
                                          const IntMatrix& S) {
  return quotient_rel_with_generators(L, S).group;
}

}  // namespace rcg
