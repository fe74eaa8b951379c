#include "simconj/linalg.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

namespace simconj {

namespace {

template <Field T>
bool negligible(const T& x, double threshold) {
  return FieldTraits<T>::is_zero(x, threshold);
}

// Row-wise denominators cleared: returns integer rows and the product of the
// per-row multipliers.
std::vector<mpz_class> clear_denominators(const Matrix<Rational>& m, mpz_class& scale) {
  std::vector<mpz_class> out;
  out.reserve(m.rows() * m.cols());
  scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out.emplace_back(m(i, j).get_num() * (l / m(i, j).get_den()));
    scale *= l;
  }
  return out;
}

bool bareiss_small(const std::vector<mpz_class>& entries, std::size_t n, mpz_class& result) {
  std::vector<std::int64_t> a(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!entries[k].fits_slong_p()) return false;
    a[k] = entries[k].get_si();
  }
  constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) {
        result = 0;
        return true;
      }
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    const __int128 pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const __int128 aik = a[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 v = (static_cast<__int128>(a[i * n + j]) * pivot - aik * a[k * n + j]) / prev;
        if (v > kMax || v < -kMax) return false;
        a[i * n + j] = static_cast<std::int64_t>(v);
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  result = sign * a[n * n - 1];
  return true;
}

}  // namespace

mpz_class integer_det(std::vector<mpz_class> a, std::size_t n) {
  if (a.size() != n * n) throw ShapeError("integer_det: entry count mismatch");
  if (n == 0) return 1;
  mpz_class small;
  if (bareiss_small(a, n, small)) return small;

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

Matrix<Rational> primitive_part(const Matrix<Rational>& m) {
  if (m.is_zero()) return m;
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& x : m.entries()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  return m * factor;
}

template <FloatField T>
Matrix<T> normalize_max(const Matrix<T>& m) {
  const double s = m.max_abs();
  if (s == 0.0) return m;
  return m * T(1.0 / s);
}

template Matrix<Real> normalize_max<Real>(const Matrix<Real>&);
template Matrix<Complex> normalize_max<Complex>(const Matrix<Complex>&);

template <Field T>
Echelon<T> row_reduce(Matrix<T> m, double tol) {
  const double threshold = is_exact_v<T> ? 0.0 : tol * m.max_abs();
  Echelon<T> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = m.rows();
    if constexpr (is_exact_v<T>) {
      for (std::size_t r = row; r < m.rows(); ++r) {
        if (sgn(m(r, col)) != 0) {
          pivot = r;
          break;
        }
      }
    } else {
      double best = threshold;
      for (std::size_t r = row; r < m.rows(); ++r) {
        const double a = magnitude(m(r, col));
        if (a > best) {
          best = a;
          pivot = r;
        }
      }
    }
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const T inv = checked_div(T(1), m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    m(row, col) = T(1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const T factor = m(r, col);
      if (negligible(factor, 0.0)) continue;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
      m(r, col) = T(0);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <Field T>
T det(const Matrix<T>& m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if constexpr (is_exact_v<T>) {
    mpz_class scale;
    auto ints = clear_denominators(m, scale);
    Rational d(integer_det(std::move(ints), n), scale);
    d.canonicalize();
    return d;
  } else {
    Matrix<T> a = m;
    T result(1);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = magnitude(a(k, k));
      for (std::size_t r = k + 1; r < n; ++r) {
        if (magnitude(a(r, k)) > best) {
          best = magnitude(a(r, k));
          p = r;
        }
      }
      if (best == 0.0) return T(0);
      if (p != k) {
        for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
        result = -result;
      }
      result *= a(k, k);
      for (std::size_t r = k + 1; r < n; ++r) {
        const T f = a(r, k) / a(k, k);
        for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
      }
    }
    return result;
  }
}

template <Field T>
std::size_t rank(const Matrix<T>& m, double tol) {
  return row_reduce(m, tol).rank();
}

template <Field T>
Matrix<T> inverse(const Matrix<T>& m, double tol) {
  if (!m.is_square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  // Threshold must refer to m alone, not to the appended identity.
  const double threshold = is_exact_v<T> ? 0.0 : tol * m.max_abs();
  const double relative = m.max_abs() > 0.0 ? threshold / aug.max_abs() : 0.0;
  auto ech = row_reduce(std::move(aug), is_exact_v<T> ? 0.0 : relative);
  if (ech.rank() < n || ech.pivot_columns[n - 1] != n - 1) throw SingularMatrix();
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ech.reduced(i, n + j);
  }
  return out;
}

template <Field T>
std::vector<Matrix<T>> nullspace(const Matrix<T>& m, double tol) {
  auto ech = row_reduce(m, tol);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<Matrix<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix<T> v(m.cols(), 1);
    v(free, 0) = T(1);
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) v(ech.pivot_columns[r], 0) = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field T>
std::optional<Matrix<T>> solve(const Matrix<T>& m, const Matrix<T>& b, double tol) {
  if (b.rows() != m.rows()) throw ShapeError("solve: right-hand side has the wrong number of rows");
  const std::size_t n = m.cols();
  Matrix<T> aug(m.rows(), n + b.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  const double scale = std::max(m.max_abs(), b.max_abs());
  const double relative = (is_exact_v<T> || scale == 0.0) ? 0.0 : tol * m.max_abs() / scale;
  auto ech = row_reduce(std::move(aug), relative);
  for (auto c : ech.pivot_columns) {
    if (c >= n) return std::nullopt;
  }
  Matrix<T> x(n, b.cols());
  for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) {
    for (std::size_t j = 0; j < b.cols(); ++j) x(ech.pivot_columns[r], j) = ech.reduced(r, n + j);
  }
  return x;
}

template <Field T>
bool is_invertible(const Matrix<T>& m, double tol) {
  if (!m.is_square()) return false;
  if constexpr (is_exact_v<T>) {
    return sgn(det(m)) != 0;
  } else {
    return rank(m, tol) == m.rows();
  }
}

#define SIMCONJ_INSTANTIATE_LINALG(T)                                                      \
  template Echelon<T> row_reduce<T>(Matrix<T>, double);                                    \
  template T det<T>(const Matrix<T>&);                                                     \
  template std::size_t rank<T>(const Matrix<T>&, double);                                  \
  template Matrix<T> inverse<T>(const Matrix<T>&, double);                                 \
  template std::vector<Matrix<T>> nullspace<T>(const Matrix<T>&, double);                  \
  template std::optional<Matrix<T>> solve<T>(const Matrix<T>&, const Matrix<T>&, double);  \
  template bool is_invertible<T>(const Matrix<T>&, double);

SIMCONJ_INSTANTIATE_LINALG(Rational)
SIMCONJ_INSTANTIATE_LINALG(Real)
SIMCONJ_INSTANTIATE_LINALG(Complex)

namespace {

template <Field T>
std::string matrix_text(const Matrix<T>& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ",";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << format_value(m(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string to_string(const Matrix<Rational>& m) { return matrix_text(m); }
std::string to_string(const Matrix<Real>& m) { return matrix_text(m); }
std::string to_string(const Matrix<Complex>& m) { return matrix_text(m); }

}  // namespace simconj
