#pragma once

// Tuple files (JSON):
//
//   {
//     "field": "rational" | "float64" | "complex128",
//     "star": "transpose" | "conjugate",
//     "n": 2, "d": 1,
//     "matrices": [["1", "2", "0", "1/3"]]
//   }
//
// Each matrix is n*n entries in row-major order. Rational entries are "p/q"
// strings (q > 0, "p" allowed for integers), float64 entries are numbers,
// complex128 entries are [re, im] pairs. "star" is optional and defaults to
// "conjugate" for complex128 and "transpose" otherwise. A single rectangular
// matrix may use "rows" and "cols" in place of "n" (with d = 1).

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "simconj/matrix.hpp"

namespace simconj {

using AnyTuple = std::variant<MatrixTuple<Rational>, MatrixTuple<Real>, MatrixTuple<Complex>>;

/// One matrix of any kind, possibly rectangular, with the file's star mode.
struct AnyMatrix {
  std::variant<Matrix<Rational>, Matrix<Real>, Matrix<Complex>> matrix;
  StarMode star = StarMode::Transpose;
};

AnyTuple parse_tuple(std::string_view json_text);
AnyTuple read_tuple_file(const std::filesystem::path& path);

/// Accepts a tuple file with d = 1 or the rows/cols form.
AnyMatrix parse_matrix(std::string_view json_text);
AnyMatrix read_matrix_file(const std::filesystem::path& path);

/// Stable JSON text for a tuple; parse_tuple(format_tuple(t)) == t.
std::string format_tuple(const MatrixTuple<Rational>& t);
std::string format_tuple(const MatrixTuple<Real>& t);
std::string format_tuple(const MatrixTuple<Complex>& t);
std::string format_tuple(const AnyTuple& t);

/// A single matrix in the same file syntax (rows/cols form when rectangular).
std::string format_matrix(const Matrix<Rational>& m, StarMode star = StarMode::Transpose);
std::string format_matrix(const Matrix<Real>& m, StarMode star = StarMode::Transpose);
std::string format_matrix(const Matrix<Complex>& m, StarMode star = StarMode::ConjugateTranspose);

FieldKind field_kind(const AnyTuple& t);
std::size_t tuple_dim(const AnyTuple& t);
std::size_t tuple_arity(const AnyTuple& t);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace simconj
