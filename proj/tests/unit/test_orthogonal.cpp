#include <doctest.h>

#include <cmath>

#include "simconj/linalg.hpp"
#include "simconj/orthogonal.hpp"
#include "simconj/random.hpp"

using namespace simconj;

namespace {

using Q = Matrix<Rational>;
using R = Matrix<Real>;

Q unit(std::size_t n, std::size_t i, std::size_t j) { return Q::unit(n, i - 1, j - 1); }

Matrix<Complex> cmat(std::initializer_list<std::initializer_list<Complex>> rows) {
  return Matrix<Complex>::from_rows(rows);
}

const Complex I(0, 1);

MatrixTuple<Complex> n1() {
  return MatrixTuple<Complex>({cmat({{1.0, I, 0.0, 0.0}, {I, -1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}})},
                              StarMode::Transpose);
}

MatrixTuple<Complex> n2() {
  return MatrixTuple<Complex>({cmat({{0.0, 1.0, 0.0, -I}, {1.0, 0.0, -I, 0.0}, {0.0, -I, 0.0, -1.0}, {-I, 0.0, -1.0, 0.0}})},
                              StarMode::Transpose);
}

}  // namespace

TEST_CASE("jacobi_eig") {
  const auto id = jacobi_eig(R::identity(3));
  CHECK(max_abs_diff(id.vectors, R::identity(3)) == 0.0);
  for (double v : id.values) CHECK(v == 1.0);

  const auto e = jacobi_eig(R::from_rows<double>({{2, 1}, {1, 2}}));
  std::vector<double> vals = e.values;
  std::sort(vals.begin(), vals.end());
  CHECK(vals[0] == doctest::Approx(1.0));
  CHECK(vals[1] == doctest::Approx(3.0));
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(std::abs(std::abs(e.vectors(0, k)) - std::sqrt(0.5)) < 1e-12);
    CHECK(std::abs(std::abs(e.vectors(1, k)) - std::sqrt(0.5)) < 1e-12);
  }

  const auto d = jacobi_eig(R::diagonal({4.0, 9.0}));
  CHECK(d.values == std::vector<double>{4.0, 9.0});

  CHECK_THROWS_AS(jacobi_eig(R::from_rows<double>({{1, 2}, {0, 1}})), NotSymmetric);
}

TEST_CASE("jacobi_eig reconstructs random hermitian matrices") {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_real_matrix(5, 5, rng), b = random_real_matrix(5, 5, rng);
    Matrix<Complex> h(5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) h(i, j) = Complex(a(i, j) + a(j, i), b(i, j) - b(j, i));
    }
    const auto e = jacobi_eig(h);
    Matrix<Complex> lambda(5, 5);
    for (std::size_t i = 0; i < 5; ++i) lambda(i, i) = e.values[i];
    CHECK(max_abs_diff(e.vectors * lambda * star(e.vectors), h) < 1e-12);
    CHECK(max_abs_diff(e.vectors * star(e.vectors), Matrix<Complex>::identity(5)) < 1e-12);
  }
}

TEST_CASE("sqrt_spd") {
  CHECK(max_abs_diff(sqrt_spd(R::identity(3)), R::identity(3)) < 1e-15);
  CHECK(max_abs_diff(sqrt_spd(R::diagonal({4.0, 9.0})), R::diagonal({2.0, 3.0})) < 1e-15);
  const auto s = R::from_rows<double>({{2, 1}, {1, 2}});
  const auto h = sqrt_spd(s);
  CHECK(max_abs_diff(h * h, s) <= 1e-12);
  CHECK_THROWS_AS(sqrt_spd(R::diagonal({1.0, -1.0})), NotPositiveDefinite);
}

TEST_CASE("specht_equivalent") {
  const MatrixTuple<Rational> a({Q::diagonal({1, 2, 2})}), b({Q::diagonal({1, 1, 2})});
  CHECK(specht_equivalent(a, a).equal);
  const auto cmp = specht_equivalent(a, b, 1);
  CHECK_FALSE(cmp.equal);
  CHECK(cmp.first_difference->lhs == 5);
  CHECK(cmp.first_difference->rhs == 4);
  CHECK(specht_equivalent(n1(), n2(), 16).equal);
  CHECK(rank(n1()[0]) == 1);
  CHECK(rank(n2()[0]) == 2);
}

TEST_CASE("orthogonal_witness: trivial and rotated") {
  const MatrixTuple<Real> id({R::identity(2)});
  const auto same = orthogonal_witness(id, id);
  CHECK(same.verdict == OrthogonalVerdict::Equivalent);
  REQUIRE(same.witness);
  CHECK(same.witness->residual_orth <= 1e-12);

  const MatrixTuple<Real> x({R::diagonal({1.0, 2.0})}), y({R::from_rows<double>({{1.5, 0.5}, {0.5, 1.5}})});
  const auto r = orthogonal_witness(x, y);
  CHECK(r.verdict == OrthogonalVerdict::Equivalent);
  REQUIRE(r.witness);
  CHECK(r.witness->residual_orth <= 1e-10);
  CHECK(r.witness->residual_conj <= 1e-10);
  const auto& o = r.witness->o;
  CHECK(max_abs_diff(o * x[0] * transpose(o), y[0]) <= 1e-10);
}

TEST_CASE("orthogonal_witness: transpose-needed counterexample") {
  const MatrixTuple<Rational> two({unit(4, 1, 2) + unit(4, 3, 4)}), one({unit(4, 1, 2)});
  CHECK(orthogonal_witness(two, one).verdict == OrthogonalVerdict::NotEquivalent);
  const auto cmp = specht_equivalent(two, one, 2);
  CHECK_FALSE(cmp.equal);
  CHECK(to_string(cmp.first_difference->word) == "x1 x1*");
}

TEST_CASE("orthogonal_witness: exact rational rotation") {
  Rng rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    const MatrixTuple<Rational> x({random_integer_matrix(3, 3, 3, rng), random_integer_matrix(3, 3, 3, rng)});
    const auto q = random_rational_orthogonal(3, 3, rng);
    const auto y = conjugate_tuple(x, q, transpose(q));
    const auto r = orthogonal_witness(x, y);
    REQUIRE(r.equivalent());
    if (r.verdict == OrthogonalVerdict::Equivalent) {
      REQUIRE(r.witness);
      CHECK(r.witness->residual_orth == 0.0);
      CHECK(r.witness->residual_conj == 0.0);
      const auto& o = r.witness->o;
      CHECK(o * transpose(o) == Q::identity(3));
      for (std::size_t i = 0; i < 2; ++i) CHECK(o * x[i] * transpose(o) == y[i]);
    } else {
      REQUIRE(r.float_witness);
      CHECK(r.float_witness->residual_orth <= 1e-8);
    }
  }
}

TEST_CASE("orthogonal_witness: exact witness may be unavailable") {
  // X = diag(1,2), Y = its conjugate by the 45 degree rotation: no rational orthogonal witness exists
  const MatrixTuple<Rational> x({Q::diagonal({1, 2})});
  const MatrixTuple<Rational> y({Q::from_rows<Rational>({{Rational(3, 2), Rational(1, 2)}, {Rational(1, 2), Rational(3, 2)}})});
  const auto r = orthogonal_witness(x, y);
  CHECK(r.verdict == OrthogonalVerdict::ExactWitnessUnavailable);
  CHECK(r.equivalent());
  REQUIRE(r.float_witness);
  CHECK(r.float_witness->residual_orth <= 1e-10);
  CHECK(r.float_witness->residual_conj <= 1e-10);
}

TEST_CASE("unitary witness over C") {
  Rng rng(4);
  const auto g = random_givens_orthogonal(3, 5, rng);
  Matrix<Complex> u(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) u(i, j) = g(i, j) * std::polar(1.0, 0.7 * static_cast<double>(i + 1));
  }
  Matrix<Complex> a(3, 3);
  const auto re = random_real_matrix(3, 3, rng), im = random_real_matrix(3, 3, rng);
  for (std::size_t k = 0; k < 9; ++k) a.entries()[k] = Complex(re.entries()[k], im.entries()[k]);
  const MatrixTuple<Complex> x({a});
  const auto y = conjugate_tuple(x, u, star(u));
  const auto r = orthogonal_witness(x, y);
  CHECK(r.verdict == OrthogonalVerdict::Equivalent);
  REQUIRE(r.witness);
  CHECK(r.witness->residual_orth <= 1e-8);
  CHECK(r.witness->residual_conj <= 1e-8);
}

TEST_CASE("specht_property_check") {
  Rng rng(8);
  const MatrixTuple<Real> x({random_real_matrix(3, 3, rng), random_real_matrix(3, 3, rng)});
  const auto o = random_givens_orthogonal(3, 4, rng);
  const auto rotated = specht_property_check(x, conjugate_tuple(x, o, transpose(o)), 2);
  CHECK(rotated.fingerprints == FingerprintStatus::Equal);
  CHECK(rotated.orthogonal.equivalent());
  CHECK(rotated.consistent);

  const MatrixTuple<Rational> a({Q::diagonal({1, 2, 2})}), b({Q::diagonal({1, 1, 2})});
  const auto no_trace = specht_property_check(a, b, 1);
  CHECK(no_trace.fingerprints == FingerprintStatus::Unequal);
  CHECK_FALSE(no_trace.orthogonal.equivalent());
  CHECK(no_trace.consistent);

  const auto complex_pair = specht_property_check(n1(), n2(), 16);
  CHECK(complex_pair.fingerprints == FingerprintStatus::Equal);
  CHECK_FALSE(complex_pair.orthogonal.equivalent());
  CHECK(complex_pair.plain_transpose_over_complex);
  CHECK_FALSE(complex_pair.consistent);
}
