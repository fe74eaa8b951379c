#include "simconj/sylvester.hpp"

#include <cmath>

namespace simconj {

template <Field T>
Polynomial<T>::Polynomial(std::vector<T> ascending) : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && FieldTraits<T>::is_zero(coeffs_.back(), 0.0)) coeffs_.pop_back();
}

template <Field T>
T Polynomial<T>::operator()(const T& t) const {
  T acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

template <Field T>
std::string to_string(const Polynomial<T>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const T& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (FieldTraits<T>::is_zero(c, 0.0)) continue;
    if (!out.empty()) out += " + ";
    out += "(" + format_value(c) + ")";
    if (k >= 1) out += "*t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

template <Field T>
Matrix<T> sylvester_operator(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.is_square() || !b.is_square()) throw ShapeError("sylvester: A and B must be square");
  const std::size_t n = a.rows(), m = b.rows();
  Matrix<T> k(n * m, n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t row = i * m + j;
      for (std::size_t l = 0; l < n; ++l) k(row, l * m + j) += a(i, l);
      for (std::size_t l = 0; l < m; ++l) k(row, i * m + l) -= b(l, j);
    }
  }
  return k;
}

template <Field T>
std::optional<Matrix<T>> sylvester_solve(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c, double tol) {
  const Matrix<T> k = sylvester_operator(a, b);
  if (c.rows() != a.rows() || c.cols() != b.rows()) throw ShapeError("sylvester: C must be n x m");
  const Matrix<T> rhs(c.rows() * c.cols(), 1, std::vector<T>(c.entries().begin(), c.entries().end()));
  auto x = solve(k, rhs, tol);
  if (!x) return std::nullopt;
  return Matrix<T>(c.rows(), c.cols(), std::vector<T>(x->entries().begin(), x->entries().end()));
}

template <Field T>
Polynomial<T> char_poly_from_traces(const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<T> power_sums(n + 1, T(0));
  Matrix<T> power = Matrix<T>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * a;
    power_sums[k] = trace(power);
  }
  // Elementary symmetric functions of the eigenvalues.
  std::vector<T> e(n + 1, T(0));
  e[0] = T(1);
  for (std::size_t k = 1; k <= n; ++k) {
    T acc(0);
    for (std::size_t i = 1; i <= k; ++i) {
      const T term = e[k - i] * power_sums[i];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[k] = checked_div(acc, T(static_cast<long>(k)));
  }
  std::vector<T> ascending(n + 1, T(0));
  for (std::size_t k = 0; k <= n; ++k) ascending[n - k] = k % 2 == 0 ? e[k] : T(-e[k]);
  return Polynomial<T>(std::move(ascending));
}

template <Field T>
T resultant(const Polynomial<T>& p, const Polynomial<T>& q) {
  if (p.is_zero() || q.is_zero()) throw Error("resultant of the zero polynomial");
  const auto dp = static_cast<std::size_t>(p.degree());
  const auto dq = static_cast<std::size_t>(q.degree());
  const std::size_t size = dp + dq;
  if (size == 0) return T(1);
  Matrix<T> s(size, size);
  for (std::size_t r = 0; r < dq; ++r) {
    for (std::size_t k = 0; k <= dp; ++k) s(r, r + k) = p.coefficients()[dp - k];
  }
  for (std::size_t r = 0; r < dp; ++r) {
    for (std::size_t k = 0; k <= dq; ++k) s(dq + r, r + k) = q.coefficients()[dq - k];
  }
  return det(s);
}

template <Field T>
bool sylvester_unique(const Matrix<T>& a, const Matrix<T>& b, const SylvesterOptions& options) {
  if (!a.is_square() || !b.is_square()) throw ShapeError("sylvester: A and B must be square");
  const T res = resultant(char_poly_from_traces(a), char_poly_from_traces(b));
  if constexpr (is_exact_v<T>) {
    return sgn(res) != 0;
  } else {
    const double scale = std::max(a.max_abs(), b.max_abs());
    const double threshold = options.tol * std::pow(scale, static_cast<double>(a.rows() + b.rows()));
    return magnitude(res) > threshold;
  }
}

#define SIMCONJ_INSTANTIATE_SYLVESTER(T)                                                                           \
  template class Polynomial<T>;                                                                                    \
  template std::string to_string<T>(const Polynomial<T>&);                                                         \
  template std::optional<Matrix<T>> sylvester_solve<T>(const Matrix<T>&, const Matrix<T>&, const Matrix<T>&,       \
                                                       double);                                                    \
  template Matrix<T> sylvester_operator<T>(const Matrix<T>&, const Matrix<T>&);                                    \
  template Polynomial<T> char_poly_from_traces<T>(const Matrix<T>&);                                               \
  template T resultant<T>(const Polynomial<T>&, const Polynomial<T>&);                                             \
  template bool sylvester_unique<T>(const Matrix<T>&, const Matrix<T>&, const SylvesterOptions&);

SIMCONJ_INSTANTIATE_SYLVESTER(Rational)
SIMCONJ_INSTANTIATE_SYLVESTER(Real)
SIMCONJ_INSTANTIATE_SYLVESTER(Complex)

}  // namespace simconj
