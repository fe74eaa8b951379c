#pragma once

// Intertwiners of two matrix tuples: matrices P with P X_i = Y_i P for all i
// (and P X_i* = Y_i* P when the star equations are requested). An invertible
// intertwiner P certifies Y_i = P X_i P^-1.

#include <cstdint>
#include <optional>
#include <vector>

#include "simconj/linalg.hpp"

namespace simconj {

template <Field T>
struct IntertwinerBasis {
  std::size_t n = 0;
  bool with_star = false;
  std::vector<Matrix<T>> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// Basis of the intertwiner space, found as the nullspace of the stacked
/// n^2-unknown linear system. Rational basis elements are primitive integer
/// matrices; floating ones are scaled to unit max-norm.
template <Field T>
IntertwinerBasis<T> intertwiner_basis(const MatrixTuple<T>& x, const MatrixTuple<T>& y, bool with_star,
                                      double tol = kDefaultRankTolerance);

/// Basis of {V : V S = S V for all S in set}; all members must be n x n.
template <Field T>
std::vector<Matrix<T>> commutant(const std::vector<Matrix<T>>& set, std::size_t n, double tol = kDefaultRankTolerance);

struct SearchOptions {
  std::uint64_t seed = 0;
  /// Monte Carlo trials; 0 selects the deterministic grid search.
  std::size_t trials = 64;
  /// Coefficients are drawn from {-sample_bound, ..., sample_bound}.
  std::int64_t sample_bound = 1000;
  /// Deterministic mode refuses grids with more than this many points.
  std::uint64_t grid_budget = 10'000'000;
  double tol = kDefaultRankTolerance;
};

/// Looks for an invertible element of span(basis).
///
/// Monte Carlo (trials > 0): tries random integer combinations; each trial
/// misses an existing invertible element with probability at most
/// n / (2 * sample_bound + 1).
///
/// Deterministic (trials == 0): scans every coefficient vector in
/// {0, ..., n}^k. det restricted to the span has degree <= n in each
/// coefficient, so vanishing on the whole grid proves the span is singular.
template <Field T>
std::optional<Matrix<T>> find_invertible(const IntertwinerBasis<T>& basis, const SearchOptions& options = {});

enum class SearchMode { MonteCarlo, Deterministic };

enum class SimilarityVerdict { Similar, NotSimilar, NotSimilarProbable };

std::string_view to_string(SimilarityVerdict v);

template <Field T>
struct GlResult {
  SimilarityVerdict verdict = SimilarityVerdict::NotSimilar;
  /// P with P X_i = Y_i P, verified before being returned.
  std::optional<Matrix<T>> witness;
  /// max_i |P X_i - Y_i P|_max (0 for exact witnesses).
  double residual = 0.0;
  std::size_t space_dimension = 0;
};

/// Decides simultaneous similarity: Y_i = P X_i P^-1 for some invertible P.
template <Field T>
GlResult<T> gl_similar(const MatrixTuple<T>& x, const MatrixTuple<T>& y, SearchMode mode,
                       SearchOptions options = {});

/// Largest residual of the intertwining equations for P.
template <Field T>
double intertwining_residual(const Matrix<T>& p, const MatrixTuple<T>& x, const MatrixTuple<T>& y, bool with_star);

#define SIMCONJ_EXTERN_INTERTWINER(T)                                                                              \
  extern template IntertwinerBasis<T> intertwiner_basis<T>(const MatrixTuple<T>&, const MatrixTuple<T>&, bool,     \
                                                           double);                                                \
  extern template std::vector<Matrix<T>> commutant<T>(const std::vector<Matrix<T>>&, std::size_t, double);        \
  extern template std::optional<Matrix<T>> find_invertible<T>(const IntertwinerBasis<T>&, const SearchOptions&);  \
  extern template GlResult<T> gl_similar<T>(const MatrixTuple<T>&, const MatrixTuple<T>&, SearchMode,             \
                                            SearchOptions);                                                        \
  extern template double intertwining_residual<T>(const Matrix<T>&, const MatrixTuple<T>&, const MatrixTuple<T>&, \
                                                  bool);

SIMCONJ_EXTERN_INTERTWINER(Rational)
SIMCONJ_EXTERN_INTERTWINER(Real)
SIMCONJ_EXTERN_INTERTWINER(Complex)
#undef SIMCONJ_EXTERN_INTERTWINER

}  // namespace simconj
