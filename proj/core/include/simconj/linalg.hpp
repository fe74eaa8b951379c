#pragma once

// Dense linear algebra shared by every module. Rational inputs are handled
// exactly; floating inputs use pivoted elimination with a relative tolerance:
// a pivot counts as nonzero iff its magnitude exceeds tol * (largest input
// entry magnitude). The tolerance is ignored for rationals.

#include <optional>
#include <vector>

#include "simconj/matrix.hpp"

namespace simconj {

inline constexpr double kDefaultRankTolerance = 1e-9;

/// Reduced row echelon form together with its pivot columns.
template <Field T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

template <Field T>
Echelon<T> row_reduce(Matrix<T> m, double tol = kDefaultRankTolerance);

/// Bareiss elimination for rationals, partially pivoted LU for floats.
template <Field T>
T det(const Matrix<T>& m);

template <Field T>
std::size_t rank(const Matrix<T>& m, double tol = kDefaultRankTolerance);

/// Throws SingularMatrix when m is singular (exactly, or at tolerance).
template <Field T>
Matrix<T> inverse(const Matrix<T>& m, double tol = kDefaultRankTolerance);

/// Basis of {v : m v = 0} as column vectors; size is cols - rank.
template <Field T>
std::vector<Matrix<T>> nullspace(const Matrix<T>& m, double tol = kDefaultRankTolerance);

/// Some solution of m x = b (free variables set to zero), or nullopt if the
/// system is inconsistent. b may have several columns.
template <Field T>
std::optional<Matrix<T>> solve(const Matrix<T>& m, const Matrix<T>& b, double tol = kDefaultRankTolerance);

/// True iff m is square and invertible (exact for rationals; full rank at
/// tolerance for floats).
template <Field T>
bool is_invertible(const Matrix<T>& m, double tol = kDefaultRankTolerance);

/// Determinant of an integer matrix given row-major, by fraction-free Bareiss
/// elimination. Small inputs use 64-bit arithmetic with overflow fallback.
mpz_class integer_det(std::vector<mpz_class> entries, std::size_t n);

/// Scales a rational matrix by a positive rational so that its entries are
/// coprime integers. The zero matrix is returned unchanged.
Matrix<Rational> primitive_part(const Matrix<Rational>& m);

/// Scales a floating matrix so that its largest entry magnitude is 1.
template <FloatField T>
Matrix<T> normalize_max(const Matrix<T>& m);

#define SIMCONJ_EXTERN_LINALG(T)                                                                   \
  extern template Echelon<T> row_reduce<T>(Matrix<T>, double);                                     \
  extern template T det<T>(const Matrix<T>&);                                                      \
  extern template std::size_t rank<T>(const Matrix<T>&, double);                                   \
  extern template Matrix<T> inverse<T>(const Matrix<T>&, double);                                  \
  extern template std::vector<Matrix<T>> nullspace<T>(const Matrix<T>&, double);                   \
  extern template std::optional<Matrix<T>> solve<T>(const Matrix<T>&, const Matrix<T>&, double);   \
  extern template bool is_invertible<T>(const Matrix<T>&, double);

SIMCONJ_EXTERN_LINALG(Rational)
SIMCONJ_EXTERN_LINALG(Real)
SIMCONJ_EXTERN_LINALG(Complex)
#undef SIMCONJ_EXTERN_LINALG

}  // namespace simconj
