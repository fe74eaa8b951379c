#pragma once

// Seeded generators for test instances: integer matrices, invertible integer
// matrices, and orthogonal matrices built from Givens rotations.

#include <cstdint>
#include <random>

#include "simconj/matrix.hpp"

namespace simconj {

using Rng = std::mt19937_64;

Matrix<Rational> random_integer_matrix(std::size_t rows, std::size_t cols, std::int64_t bound, Rng& rng);

/// Integer matrix with entries in [-bound, bound] and nonzero determinant.
Matrix<Rational> random_invertible_integer_matrix(std::size_t n, std::int64_t bound, Rng& rng);

/// Entries uniform in [-1, 1].
Matrix<Real> random_real_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Symmetric integer matrix with entries in [-bound, bound].
Matrix<Rational> random_symmetric_integer_matrix(std::size_t n, std::int64_t bound, Rng& rng);

/// Product of `rotations` Givens rotations with random planes and angles.
Matrix<Real> random_givens_orthogonal(std::size_t n, std::size_t rotations, Rng& rng);

/// Exact orthogonal matrix: product of rational Givens rotations with
/// cosine/sine taken from Pythagorean triples, times a random sign diagonal.
Matrix<Rational> random_rational_orthogonal(std::size_t n, std::size_t rotations, Rng& rng);

}  // namespace simconj
