#pragma once

// Simultaneous orthogonal / unitary similarity.
//
// Witness orientation: O X_i O* = Y_i with O O* = I.
//
// Construction: find an invertible P with P X_i = Y_i P and P X_i* = Y_i* P.
// Then Y_i = P X_i P^-1, and starring both intertwining equations shows that
// P P* commutes with every Y_i and Y_i*. H = sqrt(P P*) is a polynomial in
// P P*, so it commutes with them too, and O = H^-1 P gives
//   O O*       = H^-1 (P P*) H^-1 = I,
//   O X_i O*   = H^-1 P X_i P* H^-1 = H^-1 Y_i (P P*) H^-1 = H^-1 Y_i H = Y_i.

#include <optional>
#include <vector>

#include "simconj/intertwiner.hpp"
#include "simconj/words.hpp"

namespace simconj {

/// Fingerprint equality with starred words. A necessary condition for
/// orthogonal similarity at every degree; at degree n^2 it is also sufficient
/// over the reals (transpose) and the complex numbers (conjugate transpose).
/// max_degree defaults to n^2.
template <Field T>
FingerprintComparison<T> specht_equivalent(const MatrixTuple<T>& x, const MatrixTuple<T>& y,
                                           std::optional<std::size_t> max_degree = std::nullopt, double tol = 1e-9,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm is below tol * |S|_F.
  double tol = 1e-14;
  int max_sweeps = 100;
  /// Relative tolerance of the symmetric / Hermitian input check.
  double symmetry_tol = 1e-9;
};

template <FloatField T>
struct EigenDecomposition {
  Matrix<T> vectors;  // columns are orthonormal eigenvectors
  std::vector<double> values;
};

/// Cyclic Jacobi eigensolver for real symmetric or complex Hermitian input.
/// Throws NotSymmetric or ConvergenceError.
template <FloatField T>
EigenDecomposition<T> jacobi_eig(const Matrix<T>& s, const JacobiOptions& options = {});

/// Symmetric / Hermitian positive definite square root V sqrt(L) V*.
/// Throws NotPositiveDefinite when an eigenvalue is <= tol * (largest |eigenvalue|).
template <FloatField T>
Matrix<T> sqrt_spd(const Matrix<T>& s, double tol = 1e-12, const JacobiOptions& options = {});

template <Field T>
struct OrthogonalWitness {
  Matrix<T> o;
  double residual_orth = 0.0;  // |O O* - I|_max
  double residual_conj = 0.0;  // max_i |O X_i O* - Y_i|_max
};

enum class OrthogonalVerdict { Equivalent, NotEquivalent, NotEquivalentProbable, ExactWitnessUnavailable };

std::string_view to_string(OrthogonalVerdict v);

template <Field T>
struct OrthogonalResult {
  OrthogonalVerdict verdict = OrthogonalVerdict::NotEquivalent;
  std::optional<OrthogonalWitness<T>> witness;
  /// Floating witness for rational inputs whose exact witness would need
  /// square roots outside the rationals (verdict ExactWitnessUnavailable).
  std::optional<OrthogonalWitness<Real>> float_witness;
  /// The invertible star-intertwiner the witness was built from.
  std::optional<Matrix<T>> intertwiner;
  std::size_t space_dimension = 0;

  bool equivalent() const {
    return verdict == OrthogonalVerdict::Equivalent || verdict == OrthogonalVerdict::ExactWitnessUnavailable;
  }
};

struct OrthogonalOptions {
  SearchMode mode = SearchMode::Deterministic;
  SearchOptions search;
  JacobiOptions jacobi;
  /// Witness acceptance: residual_orth <= tol and residual_conj <= tol * scale.
  double witness_tol = 1e-8;
};

/// Decides O X_i O* = Y_i for some O with O O* = I and constructs O.
/// Rationals give an exact witness only when P P* is a rational square
/// multiple of the identity; otherwise the verdict is ExactWitnessUnavailable
/// and a floating witness is attached.
template <Field T>
OrthogonalResult<T> orthogonal_witness(const MatrixTuple<T>& x, const MatrixTuple<T>& y,
                                       const OrthogonalOptions& options = {});

/// Residuals of a candidate witness.
template <Field T>
OrthogonalWitness<T> measure_witness(Matrix<T> o, const MatrixTuple<T>& x, const MatrixTuple<T>& y);

enum class FingerprintStatus { Equal, Unequal, SkippedBudget };

std::string_view to_string(FingerprintStatus s);

template <Field T>
struct SpechtReport {
  std::size_t max_degree = 0;
  FingerprintStatus fingerprints = FingerprintStatus::SkippedBudget;
  std::optional<FingerprintMismatch<T>> first_difference;
  OrthogonalResult<T> orthogonal;
  /// witness => equal fingerprints, and (degree >= n^2 and equal) => witness.
  bool consistent = true;
  /// Set when consistency fails for complex input under the plain transpose,
  /// where equal fingerprints do not force similarity.
  bool plain_transpose_over_complex = false;
};

template <Field T>
SpechtReport<T> specht_property_check(const MatrixTuple<T>& x, const MatrixTuple<T>& y, std::size_t max_degree,
                                      const OrthogonalOptions& options = {});

#define SIMCONJ_EXTERN_ORTHOGONAL(T)                                                                              \
  extern template FingerprintComparison<T> specht_equivalent<T>(const MatrixTuple<T>&, const MatrixTuple<T>&,     \
                                                                std::optional<std::size_t>, double, std::uint64_t); \
  extern template OrthogonalResult<T> orthogonal_witness<T>(const MatrixTuple<T>&, const MatrixTuple<T>&,         \
                                                            const OrthogonalOptions&);                            \
  extern template OrthogonalWitness<T> measure_witness<T>(Matrix<T>, const MatrixTuple<T>&, const MatrixTuple<T>&); \
  extern template SpechtReport<T> specht_property_check<T>(const MatrixTuple<T>&, const MatrixTuple<T>&,         \
                                                           std::size_t, const OrthogonalOptions&);

SIMCONJ_EXTERN_ORTHOGONAL(Rational)
SIMCONJ_EXTERN_ORTHOGONAL(Real)
SIMCONJ_EXTERN_ORTHOGONAL(Complex)
#undef SIMCONJ_EXTERN_ORTHOGONAL

extern template EigenDecomposition<Real> jacobi_eig<Real>(const Matrix<Real>&, const JacobiOptions&);
extern template EigenDecomposition<Complex> jacobi_eig<Complex>(const Matrix<Complex>&, const JacobiOptions&);
extern template Matrix<Real> sqrt_spd<Real>(const Matrix<Real>&, double, const JacobiOptions&);
extern template Matrix<Complex> sqrt_spd<Complex>(const Matrix<Complex>&, double, const JacobiOptions&);

}  // namespace simconj
