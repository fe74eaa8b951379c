#include "simconj/matrix_units.hpp"

#include <cmath>
#include <map>
#include <set>

namespace simconj {

namespace {

std::size_t exact_sqrt(std::size_t v) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(v))));
  return r * r == v ? r : 0;
}

template <Field T>
bool close(const Matrix<T>& a, const Matrix<T>& b, double threshold) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    return max_abs_diff(a, b) <= threshold;
  }
}

template <Field T>
double units_scale(const std::vector<Matrix<T>>& units) {
  double s = 0.0;
  for (const auto& u : units) s = std::max(s, u.max_abs());
  return s;
}

std::string describe_violation(const EpsilonViolation& v) {
  auto idx = [](std::size_t k) { return std::to_string(k + 1); };
  std::string at = "(i,j,s,t)=(" + idx(v.i) + "," + idx(v.j) + "," + idx(v.s) + "," + idx(v.t) + ")";
  if (v.reason == EpsilonViolation::Reason::ZeroUnit) return "unit a_" + idx(v.i) + idx(v.t) + " is zero at " + at;
  return "relation violated at " + at;
}

}  // namespace

template <Field T>
EpsilonReport check_epsilon(const std::vector<Matrix<T>>& candidate, double tol) {
  const std::size_t order = exact_sqrt(candidate.size());
  if (order == 0) throw ShapeError("matrix-unit candidates must number N^2 for some N >= 1");
  const std::size_t n = candidate.front().rows();
  for (const auto& u : candidate) {
    if (!u.is_square() || u.rows() != n) throw ShapeError("matrix-unit candidates must share a square shape");
  }
  const double threshold = is_exact_v<T> ? 0.0 : tol * units_scale(candidate);
  auto at = [&](std::size_t i, std::size_t j) -> const Matrix<T>& { return candidate[i * order + j]; };
  const Matrix<T> zero(n, n);

  EpsilonReport report;
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      for (std::size_t s = 0; s < order; ++s) {
        for (std::size_t t = 0; t < order; ++t) {
          const bool linked = j == s;
          if (linked && close(at(i, t), zero, threshold)) {
            report.ok = false;
            report.violation = EpsilonViolation{EpsilonViolation::Reason::ZeroUnit, i, j, s, t, "nonzero", "0"};
            return report;
          }
          const Matrix<T> got = at(i, j) * at(s, t);
          const Matrix<T>& expected = linked ? at(i, t) : zero;
          if (!close(got, expected, threshold)) {
            report.ok = false;
            report.violation =
                EpsilonViolation{EpsilonViolation::Reason::Relation, i, j, s, t, to_string(expected), to_string(got)};
            return report;
          }
        }
      }
    }
  }
  return report;
}

template <Field T>
UnitSystem<T>::UnitSystem(std::size_t order, std::vector<Matrix<T>> units, double tol)
    : order_(order), units_(std::move(units)), tol_(tol) {
  if (order_ == 0 || units_.size() != order_ * order_) throw ShapeError("unit system needs exactly N^2 matrices");
  auto report = check_epsilon(units_, tol_);
  if (!report.ok) throw Error("not a system of matrix units: " + describe_violation(*report.violation));
}

template <Field T>
UnitSystem<T> UnitSystem<T>::standard(std::size_t n) {
  std::vector<Matrix<T>> units;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) units.push_back(Matrix<T>::unit(n, i, j));
  }
  return UnitSystem(n, std::move(units));
}

template <Field T>
bool check_delta(const Matrix<T>& v, const UnitSystem<T>& units) {
  if (!v.is_square() || v.rows() != units.dim()) throw ShapeError("check_delta: shape mismatch");
  const double threshold =
      is_exact_v<T> ? 0.0 : units.tolerance() * std::max(v.max_abs(), 1.0) * units_scale(units.units());
  for (const auto& u : units.units()) {
    if (!close(v * u, u * v, threshold)) return false;
  }
  return true;
}

template <Field T>
Matrix<T> theta_embedding(const UnitSystem<T>& units, const std::vector<Matrix<T>>& coeffs) {
  const std::size_t order = units.order();
  if (coeffs.size() != order * order) throw ShapeError("theta_embedding: need N^2 coefficients");
  Matrix<T> out(units.dim(), units.dim());
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      const auto& c = coeffs[i * order + j];
      if (!check_delta(c, units)) {
        throw NonCentralCoefficient("coefficient (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") does not commute with the units");
      }
      out += c * units(i, j);
    }
  }
  return out;
}

template <Field T>
std::vector<Matrix<T>> coefficient_product(const std::vector<Matrix<T>>& c, const std::vector<Matrix<T>>& d,
                                           std::size_t order) {
  if (c.size() != order * order || d.size() != order * order) throw ShapeError("coefficient arrays must be N x N");
  const std::size_t n = c.front().rows();
  std::vector<Matrix<T>> out(order * order, Matrix<T>(n, n));
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      for (std::size_t k = 0; k < order; ++k) out[i * order + j] += c[i * order + k] * d[k * order + j];
    }
  }
  return out;
}

template <Field T>
std::size_t units_rank(const UnitSystem<T>& units) {
  const std::size_t n = units.dim();
  std::vector<T> rows;
  for (const auto& u : units.units()) rows.insert(rows.end(), u.entries().begin(), u.entries().end());
  return rank(Matrix<T>(units.units().size(), n * n, std::move(rows)));
}

SubringReport extract_subring_coefficients(const std::vector<Matrix<Rational>>& generators,
                                           const SubringOptions& options) {
  if (generators.empty()) throw Error("extract_subring_coefficients: no generators");
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != n) throw ShapeError("generators must share a square shape");
  }
  using M = Matrix<Rational>;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const M e = M::unit(n, i, j);
      if (std::find(generators.begin(), generators.end(), e) == generators.end()) {
        throw Error("generating set lacks the standard unit E_" + std::to_string(i + 1) + std::to_string(j + 1));
      }
    }
  }

  // Ring words: all products of 1..depth generators, deduplicated.
  std::map<std::string, M> sample;
  std::vector<M> frontier(generators.begin(), generators.end());
  for (const auto& g : generators) sample.emplace(to_string(g), g);
  for (std::size_t len = 2; len <= options.depth; ++len) {
    std::vector<M> next;
    for (const auto& w : frontier) {
      for (const auto& g : generators) {
        M p = w * g;
        if (sample.emplace(to_string(p), p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }

  SubringReport report;
  report.sampled_elements = sample.size();
  std::set<Rational> entries;
  std::vector<const M*> elems;
  for (const auto& [key, m] : sample) {
    elems.push_back(&m);
    entries.insert(m(0, 0));
  }

  const M e11 = M::unit(n, 0, 0);
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < elems.size() && pairs < options.max_pairs; ++a) {
    for (std::size_t b = a; b < elems.size() && pairs < options.max_pairs; ++b, ++pairs) {
      const M& x = *elems[a];
      const M& y = *elems[b];
      const Rational sum = x(0, 0) + y(0, 0);
      const Rational prod = x(0, 0) * y(0, 0);
      const M s = x + y;
      const M p = x * e11 * y * e11;
      if (s(0, 0) != sum) report.violations.push_back("sum closure failed for " + to_string(x) + ", " + to_string(y));
      if (p(0, 0) != prod) {
        report.violations.push_back("product closure failed for " + to_string(x) + ", " + to_string(y));
      }
      entries.insert(sum);
      entries.insert(prod);
      entries.insert(Rational(-x(0, 0)));
      report.closure_checks += 2;
    }
  }

  for (const M* x : elems) {
    M rebuilt(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const M yij = M::unit(n, 0, i) * *x * M::unit(n, j, 0);
        if (yij(0, 0) != (*x)(i, j)) {
          report.violations.push_back("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") of " +
                                      to_string(*x) + " is not the (1,1) entry of E_1i X E_j1");
        }
        rebuilt += M::unit(n, i, 0) * yij * M::unit(n, 0, j);
      }
    }
    if (rebuilt != *x) report.violations.push_back("reconstruction failed for " + to_string(*x));
    ++report.reconstruction_checks;
  }
  report.entries.assign(entries.begin(), entries.end());
  return report;
}

#define SIMCONJ_INSTANTIATE_UNITS(T)                                                                        \
  template class UnitSystem<T>;                                                                             \
  template EpsilonReport check_epsilon<T>(const std::vector<Matrix<T>>&, double);                           \
  template bool check_delta<T>(const Matrix<T>&, const UnitSystem<T>&);                                     \
  template Matrix<T> theta_embedding<T>(const UnitSystem<T>&, const std::vector<Matrix<T>>&);               \
  template std::vector<Matrix<T>> coefficient_product<T>(const std::vector<Matrix<T>>&,                     \
                                                         const std::vector<Matrix<T>>&, std::size_t);       \
  template std::size_t units_rank<T>(const UnitSystem<T>&);

SIMCONJ_INSTANTIATE_UNITS(Rational)
SIMCONJ_INSTANTIATE_UNITS(Real)
SIMCONJ_INSTANTIATE_UNITS(Complex)

}  // namespace simconj
