#include <benchmark/benchmark.h>

#include "simconj/simconj.hpp"

using namespace simconj;

namespace {

MatrixTuple<Real> real_tuple(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Matrix<Real>> ms;
  for (std::size_t i = 0; i < d; ++i) ms.push_back(random_real_matrix(n, n, rng));
  return MatrixTuple<Real>(ms);
}

void BM_FingerprintReal(benchmark::State& state) {
  const auto x = real_tuple(4, 2, 1);
  const auto degree = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(x, degree, true));
}
BENCHMARK(BM_FingerprintReal)->DenseRange(2, 6, 2);

void BM_EnumerateCanonical(benchmark::State& state) {
  const auto degree = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_canonical(2, degree, true));
}
BENCHMARK(BM_EnumerateCanonical)->DenseRange(4, 8, 2);

void BM_RationalDet(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = random_integer_matrix(n, n, 9, rng);
  for (auto& x : m.entries()) x /= 7;
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_RationalDet)->RangeMultiplier(2)->Range(4, 32);

void BM_GlSimilarRational(benchmark::State& state) {
  Rng rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const MatrixTuple<Rational> x({random_integer_matrix(n, n, 5, rng), random_integer_matrix(n, n, 5, rng)});
  const auto p = random_invertible_integer_matrix(n, 3, rng);
  const auto y = conjugate_tuple(x, p, inverse(p));
  for (auto _ : state) benchmark::DoNotOptimize(gl_similar(x, y, SearchMode::MonteCarlo));
}
BENCHMARK(BM_GlSimilarRational)->DenseRange(2, 5);

void BM_OrthogonalWitnessReal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = real_tuple(n, 3, 4);
  Rng rng(5);
  const auto o = random_givens_orthogonal(n, 3 * n, rng);
  const auto y = conjugate_tuple(x, o, transpose(o));
  for (auto _ : state) benchmark::DoNotOptimize(orthogonal_witness(x, y));
}
BENCHMARK(BM_OrthogonalWitnessReal)->DenseRange(2, 6, 2);

void BM_JacobiHermitian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(6);
  const auto a = random_real_matrix(n, n, rng);
  const auto s = a * transpose(a);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eig(s));
}
BENCHMARK(BM_JacobiHermitian)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

// the packaged benchmark_main archive is LTO bytecode from another compiler version
BENCHMARK_MAIN();
