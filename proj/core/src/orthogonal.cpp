#include "simconj/orthogonal.hpp"

#include <cmath>

namespace simconj {

std::string_view to_string(OrthogonalVerdict v) {
  switch (v) {
    case OrthogonalVerdict::Equivalent:
      return "similar";
    case OrthogonalVerdict::NotEquivalent:
      return "not-similar";
    case OrthogonalVerdict::NotEquivalentProbable:
      return "not-similar-probable";
    case OrthogonalVerdict::ExactWitnessUnavailable:
      return "similar";
  }
  return "?";
}

std::string_view to_string(FingerprintStatus s) {
  switch (s) {
    case FingerprintStatus::Equal:
      return "equal";
    case FingerprintStatus::Unequal:
      return "unequal";
    case FingerprintStatus::SkippedBudget:
      return "skipped (budget)";
  }
  return "?";
}

template <Field T>
FingerprintComparison<T> specht_equivalent(const MatrixTuple<T>& x, const MatrixTuple<T>& y,
                                           std::optional<std::size_t> max_degree, double tol, std::uint64_t budget) {
  require_compatible(x, y);
  const std::size_t degree = max_degree.value_or(x.dim() * x.dim());
  return fingerprints_equal(fingerprint(x, degree, true, budget), fingerprint(y, degree, true, budget), tol);
}

template <FloatField T>
EigenDecomposition<T> jacobi_eig(const Matrix<T>& s, const JacobiOptions& options) {
  if (!s.is_square()) throw ShapeError("eigendecomposition of a non-square matrix");
  const std::size_t n = s.rows();
  const Matrix<T> s_star = star(s, StarMode::ConjugateTranspose);
  const double scale = s.max_abs();
  if (max_abs_diff(s, s_star) > options.symmetry_tol * std::max(scale, 1e-300)) {
    throw NotSymmetric("jacobi_eig: input is not symmetric / Hermitian");
  }
  Matrix<T> a = (s + s_star) * T(0.5);
  Matrix<T> v = Matrix<T>::identity(n);
  const double norm = a.frobenius_norm();

  auto off_norm = [&] {
    double sum = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (p != q) sum += std::norm(a(p, q));
      }
    }
    return std::sqrt(sum);
  };

  int sweep = 0;
  while (off_norm() > options.tol * norm) {
    if (sweep++ >= options.max_sweeps) {
      throw ConvergenceError("jacobi_eig: no convergence after " + std::to_string(options.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double b = magnitude(a(p, q));
        if (b == 0.0) continue;
        // Phase that makes the (p, q) entry real and positive.
        const T phase = FieldTraits<T>::conj(a(p, q)) / b;
        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        const double theta = (aqq - app) / (2.0 * b);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        const T gpp(c), gpq(sn), gqp = T(-sn) * phase, gqq = T(c) * phase;
        for (std::size_t k = 0; k < n; ++k) {
          const T akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
          const T vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const T apk = a(p, k), aqk = a(q, k);
          a(p, k) = FieldTraits<T>::conj(gpp) * apk + FieldTraits<T>::conj(gqp) * aqk;
          a(q, k) = FieldTraits<T>::conj(gpq) * apk + FieldTraits<T>::conj(gqq) * aqk;
        }
        a(p, q) = T(0);
        a(q, p) = T(0);
        a(p, p) = T(std::real(a(p, p)));
        a(q, q) = T(std::real(a(q, q)));
      }
    }
  }
  EigenDecomposition<T> out{std::move(v), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) out.values[i] = std::real(a(i, i));
  return out;
}

namespace {

// V diag(f(lambda)) V*.
template <FloatField T, class F>
Matrix<T> spectral_map(const EigenDecomposition<T>& eig, F f) {
  const std::size_t n = eig.values.size();
  Matrix<T> scaled = eig.vectors;
  for (std::size_t j = 0; j < n; ++j) {
    const T fj(f(eig.values[j]));
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= fj;
  }
  return scaled * star(eig.vectors, StarMode::ConjugateTranspose);
}

template <FloatField T>
void require_positive(const EigenDecomposition<T>& eig, double tol) {
  double largest = 0.0;
  for (double l : eig.values) largest = std::max(largest, std::abs(l));
  for (double l : eig.values) {
    if (largest == 0.0 || l <= tol * largest) {
      throw NotPositiveDefinite("matrix is not positive definite (eigenvalue " + format_real(l) + ")");
    }
  }
}

template <Field T>
double witness_scale(const MatrixTuple<T>& x, const MatrixTuple<T>& y) {
  return std::max({1.0, x.max_abs(), y.max_abs()});
}

template <FloatField T>
OrthogonalWitness<T> float_witness(const Matrix<T>& p, const MatrixTuple<T>& x, const MatrixTuple<T>& y,
                                   const OrthogonalOptions& options) {
  const Matrix<T> pn = normalize_max(p);
  const auto eig = jacobi_eig<T>(pn * star(pn, StarMode::ConjugateTranspose), options.jacobi);
  require_positive(eig, 1e-12);
  Matrix<T> h_inv = spectral_map(eig, [](double l) { return 1.0 / std::sqrt(l); });
  auto w = measure_witness(h_inv * pn, x, y);
  if (w.residual_orth > options.witness_tol || w.residual_conj > options.witness_tol * witness_scale(x, y)) {
    throw Error("orthogonal witness failed verification (residuals " + format_real(w.residual_orth) + ", " +
                format_real(w.residual_conj) + ")");
  }
  return w;
}

// sqrt of a non-negative rational if it is rational.
std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return Rational(num, den);
}

std::optional<Rational> scalar_multiple_of_identity(const Matrix<Rational>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && sgn(m(i, j)) != 0) return std::nullopt;
    }
    if (m(i, i) != m(0, 0)) return std::nullopt;
  }
  return m(0, 0);
}

template <FloatField F>
MatrixTuple<F> tuple_to_float(const MatrixTuple<Rational>& x) {
  std::vector<Matrix<F>> out;
  for (const auto& m : x) out.push_back(to_float<F>(m));
  return MatrixTuple<F>(std::move(out));
}

}  // namespace

template <FloatField T>
Matrix<T> sqrt_spd(const Matrix<T>& s, double tol, const JacobiOptions& options) {
  const auto eig = jacobi_eig(s, options);
  require_positive(eig, tol);
  return spectral_map(eig, [](double l) { return std::sqrt(l); });
}

template <Field T>
OrthogonalWitness<T> measure_witness(Matrix<T> o, const MatrixTuple<T>& x, const MatrixTuple<T>& y) {
  require_compatible(x, y);
  const StarMode mode = x.star_mode();
  const Matrix<T> o_star = star(o, mode);
  OrthogonalWitness<T> w;
  w.residual_orth = max_abs_diff(o * o_star, Matrix<T>::identity(o.rows()));
  for (std::size_t i = 0; i < x.arity(); ++i) {
    w.residual_conj = std::max(w.residual_conj, max_abs_diff(o * x[i] * o_star, y[i]));
  }
  w.o = std::move(o);
  return w;
}

template <Field T>
OrthogonalResult<T> orthogonal_witness(const MatrixTuple<T>& x, const MatrixTuple<T>& y,
                                       const OrthogonalOptions& options) {
  require_compatible(x, y);
  OrthogonalResult<T> out;
  const auto basis = intertwiner_basis(x, y, true, options.search.tol);
  out.space_dimension = basis.dimension();
  SearchOptions search = options.search;
  if (options.mode == SearchMode::Deterministic) search.trials = 0;
  auto p = find_invertible(basis, search);
  if (!p) {
    out.verdict = options.mode == SearchMode::Deterministic ? OrthogonalVerdict::NotEquivalent
                                                            : OrthogonalVerdict::NotEquivalentProbable;
    return out;
  }
  out.intertwiner = p;

  if constexpr (std::same_as<T, Rational>) {
    const auto lambda = scalar_multiple_of_identity(*p * transpose(*p));
    const auto root = lambda ? rational_sqrt(*lambda) : std::nullopt;
    if (root) {
      Matrix<Rational> o = *p * Rational(1 / *root);
      const Matrix<Rational> ot = transpose(o);
      bool exact = o * ot == Matrix<Rational>::identity(o.rows());
      for (std::size_t i = 0; exact && i < x.arity(); ++i) exact = o * x[i] * ot == y[i];
      if (!exact) throw Error("exact orthogonal witness failed verification");
      auto w = measure_witness(std::move(o), x, y);
      out.verdict = OrthogonalVerdict::Equivalent;
      out.witness = std::move(w);
    } else {
      out.verdict = OrthogonalVerdict::ExactWitnessUnavailable;
      out.float_witness = float_witness(to_float<Real>(*p), tuple_to_float<Real>(x), tuple_to_float<Real>(y), options);
    }
  } else {
    if (std::same_as<T, Complex> && x.star_mode() == StarMode::Transpose) {
      throw Unsupported(
          "orthogonal witness for complex matrices under the plain transpose: the symmetric square-root "
          "construction needs a Hermitian P P*");
    }
    out.verdict = OrthogonalVerdict::Equivalent;
    out.witness = float_witness(*p, x, y, options);
  }
  return out;
}

template <Field T>
SpechtReport<T> specht_property_check(const MatrixTuple<T>& x, const MatrixTuple<T>& y, std::size_t max_degree,
                                      const OrthogonalOptions& options) {
  SpechtReport<T> report;
  report.max_degree = max_degree;
  try {
    auto cmp = specht_equivalent(x, y, max_degree);
    report.fingerprints = cmp.equal ? FingerprintStatus::Equal : FingerprintStatus::Unequal;
    report.first_difference = std::move(cmp.first_difference);
  } catch (const BudgetExceeded&) {
    report.fingerprints = FingerprintStatus::SkippedBudget;
  }
  report.orthogonal = orthogonal_witness(x, y, options);

  const bool witness = report.orthogonal.equivalent();
  const bool certified_absent = report.orthogonal.verdict == OrthogonalVerdict::NotEquivalent;
  const bool at_bound = max_degree >= x.dim() * x.dim();
  if (witness && report.fingerprints == FingerprintStatus::Unequal) report.consistent = false;
  if (at_bound && report.fingerprints == FingerprintStatus::Equal && certified_absent) report.consistent = false;
  report.plain_transpose_over_complex =
      !report.consistent && std::same_as<T, Complex> && x.star_mode() == StarMode::Transpose;
  return report;
}

#define SIMCONJ_INSTANTIATE_ORTHOGONAL(T)                                                                           \
  template FingerprintComparison<T> specht_equivalent<T>(const MatrixTuple<T>&, const MatrixTuple<T>&,              \
                                                         std::optional<std::size_t>, double, std::uint64_t);        \
  template OrthogonalResult<T> orthogonal_witness<T>(const MatrixTuple<T>&, const MatrixTuple<T>&,                  \
                                                     const OrthogonalOptions&);                                     \
  template OrthogonalWitness<T> measure_witness<T>(Matrix<T>, const MatrixTuple<T>&, const MatrixTuple<T>&);        \
  template SpechtReport<T> specht_property_check<T>(const MatrixTuple<T>&, const MatrixTuple<T>&, std::size_t,      \
                                                    const OrthogonalOptions&);

SIMCONJ_INSTANTIATE_ORTHOGONAL(Rational)
SIMCONJ_INSTANTIATE_ORTHOGONAL(Real)
SIMCONJ_INSTANTIATE_ORTHOGONAL(Complex)

template EigenDecomposition<Real> jacobi_eig<Real>(const Matrix<Real>&, const JacobiOptions&);
template EigenDecomposition<Complex> jacobi_eig<Complex>(const Matrix<Complex>&, const JacobiOptions&);
template Matrix<Real> sqrt_spd<Real>(const Matrix<Real>&, double, const JacobiOptions&);
template Matrix<Complex> sqrt_spd<Complex>(const Matrix<Complex>&, double, const JacobiOptions&);

}  // namespace simconj
