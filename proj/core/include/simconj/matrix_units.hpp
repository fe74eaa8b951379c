#pragma once

// Systems of matrix units a_ij (1 <= i, j <= N) inside M_n:
//   a_ij a_st = delta_js a_it,  every a_ij nonzero.
// Such a system induces the algebra embedding
//   Theta(c) = sum_ij c_ij a_ij
// for coefficients c_ij that commute with all units.

#include <optional>
#include <string>
#include <vector>

#include "simconj/intertwiner.hpp"

namespace simconj {

/// Relation checks use absolute tolerance tol * (largest unit entry magnitude).
inline constexpr double kDefaultUnitTolerance = 1e-9;

template <Field T>
class UnitSystem {
 public:
  /// units are indexed row-major: units[i * N + j] = a_ij (zero-based).
  /// Validates the relations; throws Error describing the first violation.
  UnitSystem(std::size_t order, std::vector<Matrix<T>> units, double tol = kDefaultUnitTolerance);

  /// The standard units E_ij of M_n.
  static UnitSystem standard(std::size_t n);

  std::size_t order() const { return order_; }  // N
  std::size_t dim() const { return units_.front().rows(); }  // n
  const Matrix<T>& operator()(std::size_t i, std::size_t j) const { return units_[i * order_ + j]; }
  const std::vector<Matrix<T>>& units() const { return units_; }
  double tolerance() const { return tol_; }

 private:
  std::size_t order_;
  std::vector<Matrix<T>> units_;
  double tol_;
};

struct EpsilonViolation {
  enum class Reason { Relation, ZeroUnit };
  Reason reason = Reason::Relation;
  // Zero-based indices of the offending product a_ij * a_st.
  std::size_t i = 0, j = 0, s = 0, t = 0;
  std::string expected;
  std::string got;
};

struct EpsilonReport {
  bool ok = true;
  std::optional<EpsilonViolation> violation;
};

/// Checks every relation a_ij a_st = delta_js a_it and that every a_ij is
/// nonzero, in lexicographic (i, j, s, t) order. The candidate size must be a
/// perfect square N^2.
template <Field T>
EpsilonReport check_epsilon(const std::vector<Matrix<T>>& candidate, double tol = kDefaultUnitTolerance);

/// True iff v commutes with every unit.
template <Field T>
bool check_delta(const Matrix<T>& v, const UnitSystem<T>& units);

/// sum_ij coeffs[i * N + j] * a_ij. Throws NonCentralCoefficient unless every
/// coefficient passes check_delta.
template <Field T>
Matrix<T> theta_embedding(const UnitSystem<T>& units, const std::vector<Matrix<T>>& coeffs);

/// Product of N x N coefficient arrays: (c c')_ij = sum_k c_ik c'_kj.
template <Field T>
std::vector<Matrix<T>> coefficient_product(const std::vector<Matrix<T>>& c, const std::vector<Matrix<T>>& d,
                                           std::size_t order);

/// Rank of the N^2 x n^2 matrix of vectorized units.
template <Field T>
std::size_t units_rank(const UnitSystem<T>& units);

struct SubringOptions {
  /// Ring words are products of up to this many generators.
  std::size_t depth = 3;
  /// Cap on the number of sampled elements used for pairwise closure checks.
  std::size_t max_pairs = 4096;
};

struct SubringReport {
  std::size_t sampled_elements = 0;
  /// Distinct (1,1) entries of the sampled ring elements, sorted.
  std::vector<Rational> entries;
  std::size_t closure_checks = 0;
  std::size_t reconstruction_checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Samples the subring generated by a set containing the standard units E_ij
/// and checks that its (1,1) entries form a subring (closed under + and x,
/// via X + Y and X E_11 Y E_11) and that each sample X is recovered as
/// sum_ij E_i1 Y_ij E_1j with Y_ij = E_1i X E_j1 in the subring.
/// Throws Error when a standard unit is missing from the generators.
SubringReport extract_subring_coefficients(const std::vector<Matrix<Rational>>& generators,
                                           const SubringOptions& options = {});

#define SIMCONJ_EXTERN_UNITS(T)                                                                                  \
  extern template class UnitSystem<T>;                                                                           \
  extern template EpsilonReport check_epsilon<T>(const std::vector<Matrix<T>>&, double);                        \
  extern template bool check_delta<T>(const Matrix<T>&, const UnitSystem<T>&);                                  \
  extern template Matrix<T> theta_embedding<T>(const UnitSystem<T>&, const std::vector<Matrix<T>>&);             \
  extern template std::vector<Matrix<T>> coefficient_product<T>(const std::vector<Matrix<T>>&,                   \
                                                                const std::vector<Matrix<T>>&, std::size_t);     \
  extern template std::size_t units_rank<T>(const UnitSystem<T>&);

SIMCONJ_EXTERN_UNITS(Rational)
SIMCONJ_EXTERN_UNITS(Real)
SIMCONJ_EXTERN_UNITS(Complex)
#undef SIMCONJ_EXTERN_UNITS

}  // namespace simconj
