#include "simconj/random.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "simconj/linalg.hpp"

namespace simconj {

Matrix<Rational> random_integer_matrix(std::size_t rows, std::size_t cols, std::int64_t bound, Rng& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  Matrix<Rational> m(rows, cols);
  for (auto& x : m.entries()) x = Rational(static_cast<long>(dist(rng)));
  return m;
}

Matrix<Rational> random_invertible_integer_matrix(std::size_t n, std::int64_t bound, Rng& rng) {
  while (true) {
    auto m = random_integer_matrix(n, n, bound, rng);
    if (sgn(det(m)) != 0) return m;
  }
}

Matrix<Real> random_real_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix<Real> m(rows, cols);
  for (auto& x : m.entries()) x = dist(rng);
  return m;
}

Matrix<Rational> random_symmetric_integer_matrix(std::size_t n, std::int64_t bound, Rng& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = Rational(static_cast<long>(dist(rng)));
      m(j, i) = m(i, j);
    }
  }
  return m;
}

namespace {

template <Field T>
void apply_rotation(Matrix<T>& q, std::size_t p, std::size_t r, const T& c, const T& s) {
  for (std::size_t k = 0; k < q.rows(); ++k) {
    const T a = q(k, p), b = q(k, r);
    q(k, p) = c * a - s * b;
    q(k, r) = s * a + c * b;
  }
}

std::pair<std::size_t, std::size_t> random_plane(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t p = pick(rng);
  std::size_t r = pick(rng);
  while (r == p) r = pick(rng);
  return {p, r};
}

}  // namespace

Matrix<Real> random_givens_orthogonal(std::size_t n, std::size_t rotations, Rng& rng) {
  auto q = Matrix<Real>::identity(n);
  if (n < 2) return q;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (std::size_t k = 0; k < rotations; ++k) {
    const auto [p, r] = random_plane(n, rng);
    const double t = angle(rng);
    apply_rotation(q, p, r, std::cos(t), std::sin(t));
  }
  return q;
}

Matrix<Rational> random_rational_orthogonal(std::size_t n, std::size_t rotations, Rng& rng) {
  static constexpr std::array<std::array<long, 3>, 4> kTriples{{{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}}};
  auto q = Matrix<Rational>::identity(n);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (coin(rng)) q(i, i) = -1;
  }
  if (n < 2) return q;
  std::uniform_int_distribution<std::size_t> pick_triple(0, kTriples.size() - 1);
  for (std::size_t k = 0; k < rotations; ++k) {
    const auto [p, r] = random_plane(n, rng);
    const auto& tr = kTriples[pick_triple(rng)];
    Rational c{mpz_class(tr[0]), mpz_class(tr[2])};
    Rational s{mpz_class(tr[1]), mpz_class(tr[2])};
    if (coin(rng)) std::swap(c, s);
    if (coin(rng)) s = -s;
    apply_rotation(q, p, r, c, s);
  }
  return q;
}

}  // namespace simconj
