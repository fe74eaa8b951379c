#include <doctest.h>

#include <random>

#include "simconj/linalg.hpp"
#include "simconj/matrix.hpp"

using namespace simconj;

namespace {

using Q = Matrix<Rational>;

Q mat(std::initializer_list<std::initializer_list<long>> rows) { return Q::from_rows(rows); }

Q unit4(std::size_t i, std::size_t j) { return Q::unit(4, i - 1, j - 1); }

}  // namespace

TEST_CASE("field kinds and star modes") {
  CHECK(FieldKind::make(Kind::Rational).star == StarMode::Transpose);
  CHECK(FieldKind::make(Kind::Real64).star == StarMode::Transpose);
  CHECK(FieldKind::make(Kind::Complex128).star == StarMode::ConjugateTranspose);
  CHECK(FieldKind::make(Kind::Complex128, StarMode::Transpose).star == StarMode::Transpose);
  CHECK_THROWS_AS(FieldKind::make(Kind::Rational, StarMode::ConjugateTranspose), Error);
  CHECK_THROWS_AS(FieldKind::make(Kind::Real64, StarMode::ConjugateTranspose), Error);
}

TEST_CASE("rational parsing normalizes") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("6/-4"), ParseError);
  CHECK(format_rational(parse_rational("-10/5")) == "-2");
  CHECK(parse_rational("+7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("field values never mix kinds") {
  const FieldValue a(Rational(1, 2)), b(Rational(1, 3));
  CHECK((a + b) == FieldValue(Rational(5, 6)));
  CHECK((a / b).to_string() == "3/2");
  CHECK_THROWS_AS(a + FieldValue(0.5), KindMismatch);
  CHECK_THROWS_AS(FieldValue(Complex(1, 0)) * FieldValue(2.0), KindMismatch);
  CHECK_THROWS_AS(a / FieldValue(Rational(0)), DivisionByZero);
  CHECK_THROWS_AS(FieldValue(1.0) / FieldValue(0.0), DivisionByZero);
  CHECK(FieldValue(Complex(1, 2)).conj() == FieldValue(Complex(1, -2)));
  CHECK(FieldValue(Rational(0)).is_zero());
}

TEST_CASE("star") {
  CHECK(star(mat({{1, 2}, {3, 4}})) == mat({{1, 3}, {2, 4}}));
  CHECK(star(Q::identity(3)) == Q::identity(3));
  Matrix<Complex> i1(1, 1);
  i1(0, 0) = Complex(0, 1);
  CHECK(star(i1, StarMode::ConjugateTranspose)(0, 0) == Complex(0, -1));
  CHECK(star(i1, StarMode::Transpose)(0, 0) == Complex(0, 1));
  CHECK(star(i1)(0, 0) == Complex(0, -1));
}

TEST_CASE("trace") {
  CHECK(trace(Q::diagonal({1, 2, 2})) == 5);
  CHECK(trace(Q::zero(4, 4)) == 0);
  CHECK(trace(Q::identity(3)) == 3);
  CHECK_THROWS_AS(trace(Q::zero(2, 3)), ShapeError);
}

TEST_CASE("det") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(det(Q::identity(n)) == 1);
  CHECK(det(Q::diagonal({1, 2, 2})) == 4);
  CHECK(det(mat({{0, 1}, {0, 0}})) == 0);
  CHECK(det(Q::from_rows<Rational>({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}})) ==
        Rational(1, 10) - Rational(1, 12));
  CHECK(det(Matrix<Real>::diagonal({2.0, 3.0})) == doctest::Approx(6.0));
  CHECK_THROWS_AS(det(Q::zero(2, 3)), ShapeError);
}

TEST_CASE("det matches cofactor expansion on random integer matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    Q m(3, 3);
    for (auto& x : m.entries()) x = dist(rng);
    const Rational cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    CHECK(det(m) == cof);
  }
}

TEST_CASE("integer_det falls back to big integers") {
  // entries near 2^62 overflow the 64-bit path immediately
  const mpz_class big("4611686018427387903");
  const std::vector<mpz_class> m{big, big - 1, big + 1, big};
  CHECK(integer_det(m, 2) == big * big - (big - 1) * (big + 1));
}

TEST_CASE("rank") {
  CHECK(rank(unit4(1, 2) + unit4(3, 4)) == 2);
  CHECK(rank(unit4(1, 2)) == 1);
  CHECK(rank(Q::zero(3, 3)) == 0);
  CHECK(rank(Matrix<Real>::from_rows<double>({{1.0, 1.0}, {1.0, 1.0 + 1e-13}})) == 1);
}

TEST_CASE("inverse") {
  CHECK(inverse(Q::identity(4)) == Q::identity(4));
  CHECK(inverse(Q::diagonal({1, 2})) == Q::diagonal<Rational>({1, Rational(1, 2)}));
  CHECK_THROWS_AS(inverse(mat({{0, 1}, {0, 0}})), SingularMatrix);
  const auto m = mat({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(m * inverse(m) == Q::identity(3));
}

TEST_CASE("nullspace") {
  CHECK(nullspace(Q::identity(3)).empty());
  CHECK(nullspace(Q::zero(1, 2)).size() == 2);
  const auto ns = nullspace(mat({{1, 1}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0].rows() == 2);
  CHECK(ns[0](0, 0) == -ns[0](1, 0));
  CHECK(ns[0](0, 0) != 0);
  const auto m = mat({{1, 2, 3}, {2, 4, 6}});
  for (const auto& v : nullspace(m)) CHECK((m * v).is_zero());
}

TEST_CASE("solve") {
  const auto x = solve(mat({{1, 1}, {1, -1}}), mat({{3}, {1}}));
  REQUIRE(x);
  CHECK(*x == mat({{2}, {1}}));
  CHECK_FALSE(solve(mat({{1, 1}, {1, 1}}), mat({{1}, {2}})));
}

TEST_CASE("tuples validate shape and star mode") {
  CHECK_THROWS_AS(MatrixTuple<Rational>(std::vector<Q>{}), ShapeError);
  CHECK_THROWS_AS(MatrixTuple<Rational>({Q::identity(2), Q::identity(3)}), ShapeError);
  CHECK_THROWS_AS(MatrixTuple<Rational>({Q::zero(2, 3)}), ShapeError);
  CHECK_THROWS(MatrixTuple<Rational>({Q::identity(2)}, StarMode::ConjugateTranspose));
  const MatrixTuple<Complex> t({Matrix<Complex>::identity(2)}, StarMode::Transpose);
  CHECK(t.star_mode() == StarMode::Transpose);
  CHECK(t.field_kind() == FieldKind::make(Kind::Complex128, StarMode::Transpose));
}

TEST_CASE("to_float converts exactly representable values") {
  const auto f = to_float<Real>(Q::from_rows<Rational>({{Rational(1, 2), Rational(-3)}}));
  CHECK(f(0, 0) == 0.5);
  CHECK(f(0, 1) == -3.0);
}
