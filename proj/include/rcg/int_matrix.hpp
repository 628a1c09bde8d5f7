// Dense exact-integer matrices: Eigen dynamic types over GMP integers.
// Everything downstream (normal forms, lattice arithmetic, root data) is
// built on these aliases; arithmetic never wraps and never rounds.

#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

}  // namespace Eigen

namespace rcg {

using Int = mpz_class;
using Index = Eigen::Index;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;

inline int sign(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

// |a| < |b|, without forming temporaries.
inline bool abs_less(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

inline Int trunc_div(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Int& d, const Int& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int exact_div(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool is_odd(const Int& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

Int dot(const IntVector& a, const IntVector& b);

bool is_zero(const IntMatrix& m);
bool equal(const IntMatrix& a, const IntMatrix& b);

// Row-major construction helpers, mostly for tests and small literals.
IntMatrix mat_from_rows(std::initializer_list<std::initializer_list<long>> rows);
IntVector vec_from(std::initializer_list<long> entries);

std::vector<Int> column_as_vector(const IntMatrix& m, Index j);

// "(1, 0, -1)"
std::string format_vector(const IntVector& v);

}  // namespace rcg
