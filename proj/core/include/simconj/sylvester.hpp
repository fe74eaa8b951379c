#pragma once

// Sylvester's equation A X - X B = C. It has a unique solution for every C
// iff A and B have no common eigenvalue, which is decided here from traces
// alone: power sums tr(A^k) give the characteristic polynomial through
// Newton's identities, and the resultant of the two characteristic
// polynomials vanishes iff they share a root.

#include <optional>
#include <vector>

#include "simconj/linalg.hpp"

namespace simconj {

/// Coefficients in ascending degree with no trailing zeros; the zero
/// polynomial has no coefficients.
template <Field T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> ascending);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coefficients() const { return coeffs_; }
  const T& leading() const { return coeffs_.back(); }
  T operator()(const T& t) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }

 private:
  std::vector<T> coeffs_;
};

template <Field T>
std::string to_string(const Polynomial<T>& p);

/// Some solution of A X - X B = C (free parameters set to zero) or nullopt if
/// the system is inconsistent. A is n x n, B is m x m, C is n x m.
template <Field T>
std::optional<Matrix<T>> sylvester_solve(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                                         double tol = kDefaultRankTolerance);

/// The n*m x n*m matrix of X -> A X - X B on row-major vec(X).
template <Field T>
Matrix<T> sylvester_operator(const Matrix<T>& a, const Matrix<T>& b);

/// det(t I - A) from the power sums tr(A^k), k = 1..n, via Newton's identities.
template <Field T>
Polynomial<T> char_poly_from_traces(const Matrix<T>& a);

/// Determinant of the Sylvester matrix of p and q (rows of p's coefficients
/// first, highest degree leftmost). Equals lc(p)^deg(q) * prod q(alpha) over
/// the roots alpha of p. Throws Error for a zero polynomial.
template <Field T>
T resultant(const Polynomial<T>& p, const Polynomial<T>& q);

struct SylvesterOptions {
  /// Floating kinds: resultant counts as nonzero iff |res| > tol * scale^(n+m),
  /// scale = largest entry magnitude of A and B.
  double tol = 1e-8;
};

/// True iff A X - X B = C is uniquely solvable for every C, decided by
/// resultant(char_poly(A), char_poly(B)) != 0.
template <Field T>
bool sylvester_unique(const Matrix<T>& a, const Matrix<T>& b, const SylvesterOptions& options = {});

#define SIMCONJ_EXTERN_SYLVESTER(T)                                                                         \
  extern template class Polynomial<T>;                                                                      \
  extern template std::string to_string<T>(const Polynomial<T>&);                                           \
  extern template std::optional<Matrix<T>> sylvester_solve<T>(const Matrix<T>&, const Matrix<T>&,           \
                                                              const Matrix<T>&, double);                    \
  extern template Matrix<T> sylvester_operator<T>(const Matrix<T>&, const Matrix<T>&);                      \
  extern template Polynomial<T> char_poly_from_traces<T>(const Matrix<T>&);                                 \
  extern template T resultant<T>(const Polynomial<T>&, const Polynomial<T>&);                               \
  extern template bool sylvester_unique<T>(const Matrix<T>&, const Matrix<T>&, const SylvesterOptions&);

SIMCONJ_EXTERN_SYLVESTER(Rational)
SIMCONJ_EXTERN_SYLVESTER(Real)
SIMCONJ_EXTERN_SYLVESTER(Complex)
#undef SIMCONJ_EXTERN_SYLVESTER

}  // namespace simconj
