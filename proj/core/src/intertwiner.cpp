#include "simconj/intertwiner.hpp"

#include <random>

namespace simconj {

namespace {

// Positive results found by random sampling are certified like any other, so
// the deterministic search tries a few samples before paying for the grid.
constexpr std::size_t kDeterministicPrefilterTrials = 16;

// Rows of the linear system P A = B P in the row-major unknowns of P.
template <Field T>
void append_equations(std::vector<T>& rows, const Matrix<T>& a, const Matrix<T>& b, std::size_t n) {
  const std::size_t unknowns = n * n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t base = rows.size();
      rows.resize(base + unknowns, T(0));
      for (std::size_t k = 0; k < n; ++k) {
        rows[base + i * n + k] += a(k, j);
        rows[base + k * n + j] -= b(i, k);
      }
    }
  }
}

template <Field T>
std::vector<Matrix<T>> solve_intertwining(const std::vector<std::pair<Matrix<T>, Matrix<T>>>& pairs, std::size_t n,
                                          double tol) {
  std::vector<T> rows;
  for (const auto& [a, b] : pairs) append_equations(rows, a, b, n);
  const std::size_t unknowns = n * n;
  const std::size_t equations = rows.size() / unknowns;
  Matrix<T> system(equations, unknowns, std::move(rows));
  std::vector<Matrix<T>> out;
  for (auto& v : nullspace(system, tol)) {
    Matrix<T> p(n, n, std::vector<T>(v.entries().begin(), v.entries().end()));
    if constexpr (is_exact_v<T>) {
      out.push_back(primitive_part(p));
    } else {
      out.push_back(normalize_max(p));
    }
  }
  return out;
}

template <Field T>
Matrix<T> combine(const std::vector<Matrix<T>>& basis, const std::vector<std::int64_t>& coeffs) {
  Matrix<T> p(basis.front().rows(), basis.front().cols());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (coeffs[j] == 0) continue;
    p += basis[j] * T(static_cast<long>(coeffs[j]));
  }
  return p;
}

// Invertibility test specialised for the hot loop of the search.
template <Field T>
class InvertibilityProbe {
 public:
  InvertibilityProbe(const std::vector<Matrix<T>>& basis, double tol) : basis_(basis), tol_(tol) {
    if constexpr (is_exact_v<T>) {
      for (const auto& b : basis_) {
        std::vector<mpz_class> ints;
        for (const auto& x : b.entries()) ints.push_back(x.get_num());  // primitive: denominators are 1
        integer_basis_.push_back(std::move(ints));
      }
    }
  }

  bool invertible(const std::vector<std::int64_t>& coeffs) {
    const std::size_t n = basis_.front().rows();
    if constexpr (is_exact_v<T>) {
      std::vector<mpz_class> entries(n * n, 0);
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        const mpz_class c(static_cast<long>(coeffs[j]));
        for (std::size_t e = 0; e < entries.size(); ++e) entries[e] += c * integer_basis_[j][e];
      }
      return integer_det(std::move(entries), n) != 0;
    } else {
      return is_invertible(combine(basis_, coeffs), tol_);
    }
  }

 private:
  const std::vector<Matrix<T>>& basis_;
  double tol_;
  std::vector<std::vector<mpz_class>> integer_basis_;
};

std::mt19937_64 trial_generator(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

template <Field T>
std::optional<Matrix<T>> monte_carlo(const IntertwinerBasis<T>& b, InvertibilityProbe<T>& probe, std::size_t trials,
                                     const SearchOptions& options) {
  const std::int64_t bound = std::max<std::int64_t>(options.sample_bound, 1);
  std::vector<std::int64_t> coeffs(b.dimension());
  for (std::size_t t = 0; t < trials; ++t) {
    auto gen = trial_generator(options.seed, t);
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    for (auto& c : coeffs) c = dist(gen);
    if (probe.invertible(coeffs)) return combine(b.basis, coeffs);
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(SimilarityVerdict v) {
  switch (v) {
    case SimilarityVerdict::Similar:
      return "similar";
    case SimilarityVerdict::NotSimilar:
      return "not-similar";
    case SimilarityVerdict::NotSimilarProbable:
      return "not-similar-probable";
  }
  return "?";
}

template <Field T>
IntertwinerBasis<T> intertwiner_basis(const MatrixTuple<T>& x, const MatrixTuple<T>& y, bool with_star, double tol) {
  require_compatible(x, y);
  std::vector<std::pair<Matrix<T>, Matrix<T>>> pairs;
  for (std::size_t i = 0; i < x.arity(); ++i) {
    pairs.emplace_back(x[i], y[i]);
    if (with_star) pairs.emplace_back(star(x[i], x.star_mode()), star(y[i], y.star_mode()));
  }
  return IntertwinerBasis<T>{x.dim(), with_star, solve_intertwining(pairs, x.dim(), tol)};
}

template <Field T>
std::vector<Matrix<T>> commutant(const std::vector<Matrix<T>>& set, std::size_t n, double tol) {
  std::vector<std::pair<Matrix<T>, Matrix<T>>> pairs;
  for (const auto& s : set) {
    if (!s.is_square() || s.rows() != n) throw ShapeError("commutant: members must be n x n");
    pairs.emplace_back(s, s);
  }
  return solve_intertwining(pairs, n, tol);
}

template <Field T>
std::optional<Matrix<T>> find_invertible(const IntertwinerBasis<T>& b, const SearchOptions& options) {
  if (b.basis.empty()) return std::nullopt;
  InvertibilityProbe<T> probe(b.basis, options.tol);
  if (options.trials > 0) return monte_carlo(b, probe, options.trials, options);

  if (auto p = monte_carlo(b, probe, kDeterministicPrefilterTrials, options)) return p;

  const std::size_t k = b.dimension();
  const std::uint64_t side = b.n + 1;
  std::uint64_t points = 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (points > options.grid_budget / side) {
      throw BudgetExceeded("deterministic search grid (" + std::to_string(side) + "^" + std::to_string(k) +
                           " points) exceeds budget " + std::to_string(options.grid_budget));
    }
    points *= side;
  }
  std::vector<std::int64_t> coeffs(k, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < k && coeffs[pos] == static_cast<std::int64_t>(b.n)) coeffs[pos++] = 0;
    if (pos == k) return std::nullopt;
    ++coeffs[pos];
    if (probe.invertible(coeffs)) return combine(b.basis, coeffs);
  }
}

template <Field T>
double intertwining_residual(const Matrix<T>& p, const MatrixTuple<T>& x, const MatrixTuple<T>& y, bool with_star) {
  double r = 0.0;
  for (std::size_t i = 0; i < x.arity(); ++i) {
    r = std::max(r, max_abs_diff(p * x[i], y[i] * p));
    if (with_star) {
      r = std::max(r, max_abs_diff(p * star(x[i], x.star_mode()), star(y[i], y.star_mode()) * p));
    }
  }
  return r;
}

template <Field T>
GlResult<T> gl_similar(const MatrixTuple<T>& x, const MatrixTuple<T>& y, SearchMode mode, SearchOptions options) {
  require_compatible(x, y);
  GlResult<T> out;
  const auto basis = intertwiner_basis(x, y, false, options.tol);
  out.space_dimension = basis.dimension();
  if (mode == SearchMode::Deterministic) options.trials = 0;
  auto p = find_invertible(basis, options);
  if (!p) {
    out.verdict = mode == SearchMode::Deterministic ? SimilarityVerdict::NotSimilar
                                                    : SimilarityVerdict::NotSimilarProbable;
    return out;
  }
  out.residual = intertwining_residual(*p, x, y, false);
  if constexpr (is_exact_v<T>) {
    if (out.residual != 0.0) throw Error("similarity witness failed exact verification");
  } else {
    const double scale = std::max({1.0, x.max_abs(), y.max_abs()}) * p->max_abs();
    if (out.residual > 1e-8 * scale) throw Error("similarity witness failed verification");
  }
  out.verdict = SimilarityVerdict::Similar;
  out.witness = std::move(p);
  return out;
}

#define SIMCONJ_INSTANTIATE_INTERTWINER(T)                                                                       \
  template IntertwinerBasis<T> intertwiner_basis<T>(const MatrixTuple<T>&, const MatrixTuple<T>&, bool, double); \
  template std::vector<Matrix<T>> commutant<T>(const std::vector<Matrix<T>>&, std::size_t, double);              \
  template std::optional<Matrix<T>> find_invertible<T>(const IntertwinerBasis<T>&, const SearchOptions&);        \
  template GlResult<T> gl_similar<T>(const MatrixTuple<T>&, const MatrixTuple<T>&, SearchMode, SearchOptions);   \
  template double intertwining_residual<T>(const Matrix<T>&, const MatrixTuple<T>&, const MatrixTuple<T>&, bool);

SIMCONJ_INSTANTIATE_INTERTWINER(Rational)
SIMCONJ_INSTANTIATE_INTERTWINER(Real)
SIMCONJ_INSTANTIATE_INTERTWINER(Complex)

}  // namespace simconj
