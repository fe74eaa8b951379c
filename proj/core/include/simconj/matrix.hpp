#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simconj/error.hpp"
#include "simconj/scalar.hpp"

namespace simconj {

/// Dense row-major matrix over one of the supported fields.
template <Field T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw ShapeError("entry count does not match rows x cols");
  }

  /// Builds from nested rows; every row must have the same length.
  template <class U>
  static Matrix from_rows(std::initializer_list<std::initializer_list<U>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<T> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw ShapeError("ragged initializer");
      for (const auto& x : row) data.emplace_back(T(x));
    }
    return Matrix(r, c, std::move(data));
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  template <class U>
  static Matrix diagonal(std::initializer_list<U> diag) {
    Matrix m(diag.size(), diag.size());
    std::size_t i = 0;
    for (const auto& x : diag) {
      m(i, i) = T(x);
      ++i;
    }
    return m;
  }

  /// Standard matrix unit E_ij (zero-based indices).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> entries() { return data_; }
  std::span<const T> entries() const { return data_; }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if constexpr (is_exact_v<T>) {
          if (sgn(aik) == 0) continue;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return FieldTraits<T>::is_zero(x, 0.0); });
  }

  /// Largest entry magnitude (0 for the empty matrix).
  double max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, magnitude(x));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : data_) {
      const double a = magnitude(x);
      s += a * a;
    }
    return std::sqrt(s);
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Transpose, conjugated in ConjugateTranspose mode.
template <Field T>
Matrix<T> star(const Matrix<T>& m, StarMode mode = FieldTraits<T>::default_star) {
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = star_scalar(m(i, j), mode);
  }
  return out;
}

template <Field T>
Matrix<T> transpose(const Matrix<T>& m) {
  return star(m, StarMode::Transpose);
}

template <Field T>
T trace(const Matrix<T>& m) {
  if (!m.is_square()) throw ShapeError("trace of a non-square matrix");
  T s(0);
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

/// Largest entrywise magnitude of a - b.
template <Field T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix shapes differ");
  double m = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) m = std::max(m, magnitude(T(ea[k] - eb[k])));
  return m;
}

/// Entrywise conversion from rationals to a floating kind.
template <FloatField T>
Matrix<T> to_float(const Matrix<Rational>& m) {
  std::vector<T> data;
  data.reserve(m.rows() * m.cols());
  for (const auto& x : m.entries()) data.emplace_back(T(x.get_d()));
  return Matrix<T>(m.rows(), m.cols(), std::move(data));
}

/// A d-tuple of square n x n matrices of one kind, with its star involution.
template <Field T>
class MatrixTuple {
 public:
  MatrixTuple() = default;
  explicit MatrixTuple(std::vector<Matrix<T>> matrices, StarMode star = FieldTraits<T>::default_star)
      : matrices_(std::move(matrices)), star_(star) {
    if (matrices_.empty()) throw ShapeError("matrix tuple must contain at least one matrix");
    const std::size_t n = matrices_.front().rows();
    for (const auto& m : matrices_) {
      if (!m.is_square() || m.rows() != n) throw ShapeError("tuple members must share a square shape");
    }
    if constexpr (!std::same_as<T, Complex>) {
      if (star_ != StarMode::Transpose) throw Error("star mode 'conjugate' is only valid for complex128");
    }
  }

  std::size_t arity() const { return matrices_.size(); }
  std::size_t dim() const { return matrices_.front().rows(); }
  StarMode star_mode() const { return star_; }
  FieldKind field_kind() const { return FieldKind{FieldTraits<T>::kind, star_}; }

  const Matrix<T>& operator[](std::size_t i) const { return matrices_[i]; }
  const std::vector<Matrix<T>>& matrices() const { return matrices_; }
  auto begin() const { return matrices_.begin(); }
  auto end() const { return matrices_.end(); }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : matrices_) m = std::max(m, x.max_abs());
    return m;
  }

  friend bool operator==(const MatrixTuple&, const MatrixTuple&) = default;

 private:
  std::vector<Matrix<T>> matrices_;
  StarMode star_ = FieldTraits<T>::default_star;
};

/// Throws ShapeError unless both tuples have the same arity, size and star mode.
template <Field T>
void require_compatible(const MatrixTuple<T>& x, const MatrixTuple<T>& y) {
  if (x.arity() != y.arity() || x.dim() != y.dim()) {
    throw ShapeError("tuples differ in arity or matrix size");
  }
  if (x.star_mode() != y.star_mode()) throw ShapeError("tuples use different star modes");
}

/// Componentwise P * X_i * Q.
template <Field T>
MatrixTuple<T> conjugate_tuple(const MatrixTuple<T>& x, const Matrix<T>& left, const Matrix<T>& right) {
  std::vector<Matrix<T>> out;
  out.reserve(x.arity());
  for (const auto& m : x) out.push_back(left * m * right);
  return MatrixTuple<T>(std::move(out), x.star_mode());
}

std::string to_string(const Matrix<Rational>& m);
std::string to_string(const Matrix<Real>& m);
std::string to_string(const Matrix<Complex>& m);

}  // namespace simconj
