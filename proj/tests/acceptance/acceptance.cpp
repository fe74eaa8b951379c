// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "simconj/simconj.hpp"

using namespace simconj;

namespace {

using Q = Matrix<Rational>;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; keeps the first message as the detail.
class Checker {
 public:
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (out_.pass) out_.detail = what;
    out_.pass = false;
  }
  void note(const std::string& s) {
    if (out_.pass) out_.detail = s;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

Q unit(std::size_t n, std::size_t i, std::size_t j) { return Q::unit(n, i - 1, j - 1); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// ---- 1 ---------------------------------------------------------------------

Outcome no_trace() {
  Checker c;
  const MatrixTuple<Rational> x({Q::diagonal({1, 2, 2})}), y({Q::diagonal({1, 1, 2})});
  const auto cmp = fingerprints_equal(fingerprint(x, 1, true), fingerprint(y, 1, true));
  c.require(!cmp.equal, "fingerprints agree at D=1");
  c.require(cmp.first_difference && cmp.first_difference->word == parse_word("x1") &&
                cmp.first_difference->lhs == 5 && cmp.first_difference->rhs == 4,
            "expected x1: 5 vs 4");
  const auto gl = gl_similar(x, y, SearchMode::Deterministic);
  c.require(gl.verdict == SimilarityVerdict::NotSimilar, "gl_similar: " + std::string(to_string(gl.verdict)));
  c.note("x1: 5 vs 4, not-similar");
  return c.result();
}

// ---- 2 ---------------------------------------------------------------------

Outcome no_transpose() {
  Checker c;
  const MatrixTuple<Rational> x({unit(4, 1, 2) + unit(4, 3, 4)}), y({unit(4, 1, 2)});
  const auto fx = fingerprint(x, 16, false), fy = fingerprint(y, 16, false);
  c.require(fx.entries.size() == 16, "expected one pure word per degree");
  c.require(fingerprints_equal(fx, fy).equal, "pure fingerprints differ at some D <= 16");
  const auto sx = fingerprint(x, 2, true), sy = fingerprint(y, 2, true);
  const auto cmp = fingerprints_equal(sx, sy);
  const Word xxs = parse_word("x1 x1*");
  c.require(!cmp.equal && cmp.first_difference->word == xxs, "starred fingerprints should first differ at x1 x1*");
  c.require(sx.entries.at(xxs) == 2 && sy.entries.at(xxs) == 1, "tr(X X*) should be 2 vs 1");
  const auto gl = gl_similar(x, y, SearchMode::Deterministic);
  c.require(gl.verdict == SimilarityVerdict::NotSimilar, "gl_similar: " + std::string(to_string(gl.verdict)));
  c.note("pure equal to D=16; x1 x1*: 2 vs 1; not-similar");
  return c.result();
}

// ---- 3 ---------------------------------------------------------------------

Outcome complex_transpose() {
  Checker c;
  const Complex I(0, 1);
  const auto n1 = Matrix<Complex>::from_rows<Complex>(
      {{1.0, I, 0.0, 0.0}, {I, -1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}});
  const auto n2 = Matrix<Complex>::from_rows<Complex>(
      {{0.0, 1.0, 0.0, -I}, {1.0, 0.0, -I, 0.0}, {0.0, -I, 0.0, -1.0}, {-I, 0.0, -1.0, 0.0}});
  const MatrixTuple<Complex> x({n1}, StarMode::Transpose), y({n2}, StarMode::Transpose);
  const auto fx = fingerprint(x, 16, true), fy = fingerprint(y, 16, true);
  c.require(fx.entries.size() == enumerate_canonical(1, 16, true).size(), "fingerprint does not cover every word");
  const auto cmp = fingerprints_equal(fx, fy);
  c.require(cmp.equal, cmp.first_difference ? "differs at " + to_string(cmp.first_difference->word) : "differs");
  c.require(rank(n1) == 1 && rank(n2) == 2, "ranks should be 1 and 2");
  const auto gl = gl_similar(x, y, SearchMode::Deterministic);
  c.require(gl.verdict == SimilarityVerdict::NotSimilar, "gl_similar: " + std::string(to_string(gl.verdict)));
  c.note(std::to_string(fx.entries.size()) + " words equal; ranks 1 vs 2; not-similar");
  return c.result();
}

// ---- 4 ---------------------------------------------------------------------

Outcome orthogonal_round_trip() {
  Checker c;
  Rng rng(2024);
  std::uniform_int_distribution<std::size_t> dim(2, 6), arity(1, 4);
  double worst_orth = 0, worst_conj = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = dim(rng), d = arity(rng);
    std::vector<Matrix<Real>> ms;
    for (std::size_t i = 0; i < d; ++i) ms.push_back(random_real_matrix(n, n, rng));
    const MatrixTuple<Real> x(ms);
    const auto o0 = random_givens_orthogonal(n, 3 * n, rng);
    const auto y = conjugate_tuple(x, o0, star(o0));
    const auto r = orthogonal_witness(x, y);
    const std::string tag = "trial " + std::to_string(trial) + " (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
    c.require(r.verdict == OrthogonalVerdict::Equivalent && r.witness.has_value(),
              tag + ": " + std::string(to_string(r.verdict)));
    if (!r.witness) continue;
    // independent re-measurement of the returned O
    const auto& o = r.witness->o;
    const double orth = max_abs_diff(o * star(o), Matrix<Real>::identity(n));
    double conj = 0;
    for (std::size_t i = 0; i < d; ++i) conj = std::max(conj, max_abs_diff(o * x[i] * star(o), y[i]));
    const double scale = std::max(1.0, std::max(x.max_abs(), y.max_abs()));
    c.require(orth <= 1e-8, tag + ": residual_orth " + fmt(orth));
    c.require(conj <= 1e-8 * scale, tag + ": residual_conj " + fmt(conj));
    worst_orth = std::max(worst_orth, orth);
    worst_conj = std::max(worst_conj, conj / scale);
  }
  c.note("100 trials; max residual_orth " + fmt(worst_orth) + ", max residual_conj/scale " + fmt(worst_conj));
  return c.result();
}

// ---- 5 ---------------------------------------------------------------------

Outcome gl_round_trip() {
  Checker c;
  Rng rng(77);
  std::uniform_int_distribution<std::size_t> dim(1, 5), arity(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = dim(rng), d = arity(rng);
    std::vector<Q> ms;
    for (std::size_t i = 0; i < d; ++i) ms.push_back(random_integer_matrix(n, n, 5, rng));
    const MatrixTuple<Rational> x(ms);
    const auto p = random_invertible_integer_matrix(n, 3, rng);
    const auto y = conjugate_tuple(x, p, inverse(p));
    const auto r = gl_similar(x, y, SearchMode::Deterministic);
    const std::string tag = "trial " + std::to_string(trial);
    c.require(r.verdict == SimilarityVerdict::Similar && r.witness.has_value(),
              tag + ": " + std::string(to_string(r.verdict)));
    if (!r.witness) continue;
    const auto& w = *r.witness;
    c.require(det(w) != 0, tag + ": witness is singular");
    for (std::size_t i = 0; i < d; ++i) c.require(w * x[i] == y[i] * w, tag + ": witness fails P X = Y P exactly");
  }
  c.note("100 trials, all witnesses exact");
  return c.result();
}

// ---- 6 ---------------------------------------------------------------------

Outcome specht_sufficiency() {
  Checker c;
  Rng rng(606);
  std::uniform_int_distribution<int> kind(0, 3);
  int equal = 0, unequal = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_symmetric_integer_matrix(2, 3, rng);
    Q b;
    switch (kind(rng)) {
      case 0: {  // rational rotation conjugate
        const auto q = random_rational_orthogonal(2, 2, rng);
        b = q * a * transpose(q);
        break;
      }
      case 1: {  // same trace, independent otherwise
        b = random_symmetric_integer_matrix(2, 3, rng);
        b(1, 1) = trace(a) - b(0, 0);
        break;
      }
      case 2:  // swap the diagonal: same spectrum exactly when off-diagonal signs do not matter
        b = Q::from_rows<Rational>({{a(1, 1), -a(0, 1)}, {-a(1, 0), a(0, 0)}});
        break;
      default:
        b = random_symmetric_integer_matrix(2, 3, rng);
    }
    const MatrixTuple<Rational> x({a}), y({b});
    const bool fp_equal = fingerprints_equal(fingerprint(x, 4, true), fingerprint(y, 4, true)).equal;
    SearchOptions grid;
    grid.trials = 0;
    const bool witness = find_invertible(intertwiner_basis(x, y, true), grid).has_value();
    (fp_equal ? equal : unequal)++;
    c.require(fp_equal == witness, "pair " + std::to_string(trial) + ": fingerprints " +
                                       (fp_equal ? "equal" : "unequal") + " but witness " +
                                       (witness ? "found" : "absent"));
  }
  c.note("200 pairs (" + std::to_string(equal) + " equal, " + std::to_string(unequal) + " unequal), all coincide");
  return c.result();
}

// ---- 7 ---------------------------------------------------------------------

using Poly = Polynomial<Rational>;

// det(t I - A) by cofactor expansion along the first row.
Poly cofactor_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly({Rational(1)});
  if (n == 1) return m[0][0];
  Poly out;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Poly term = m[0][j] * cofactor_det(minor);
    out = j % 2 == 0 ? out + term : out - term;
  }
  return out;
}

Poly cofactor_char_poly(const Q& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = i == j ? Poly({-a(i, j), Rational(1)}) : Poly({-a(i, j)});
    }
  }
  return cofactor_det(m);
}

Q random_triangular(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<long> diag(-2, 2), off(-4, 4);
  Q m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = diag(rng);
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = off(rng);
  }
  return m;
}

Outcome sylvester_criterion() {
  Checker c;
  Rng rng(707);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  int unique = 0, singular = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = dim(rng), m = dim(rng);
    Q a, b;
    if (trial % 2 == 0) {
      // triangular with small diagonals: shared eigenvalues are common; conjugate to hide the structure
      const auto p = random_invertible_integer_matrix(n, 2, rng), q = random_invertible_integer_matrix(m, 2, rng);
      a = p * random_triangular(n, rng) * inverse(p);
      b = q * random_triangular(m, rng) * inverse(q);
    } else {
      a = random_integer_matrix(n, n, 4, rng);
      b = random_integer_matrix(m, m, 4, rng);
    }
    const std::string tag = "pair " + std::to_string(trial);
    const bool fast = sylvester_unique(a, b);
    const bool oracle = is_invertible(sylvester_operator(a, b));
    c.require(fast == oracle, tag + ": trace/resultant route disagrees with the flattened system");
    (oracle ? unique : singular)++;
    c.require(char_poly_from_traces(a) == cofactor_char_poly(a), tag + ": char poly of A differs from cofactor");
    c.require(char_poly_from_traces(b) == cofactor_char_poly(b), tag + ": char poly of B differs from cofactor");
  }
  c.note("50 pairs (" + std::to_string(unique) + " unique, " + std::to_string(singular) + " not), char polys match");
  return c.result();
}

// ---- 8 ---------------------------------------------------------------------

std::set<Word> brute_force_words(std::size_t d, std::size_t max_degree, bool include_star) {
  std::set<Word> out;
  const std::size_t alphabet = include_star ? 2 * d : d;
  for (std::size_t k = 1; k <= max_degree; ++k) {
    std::vector<std::size_t> digits(k, 0);
    while (true) {
      std::vector<Letter> letters;
      for (auto x : digits) letters.push_back({static_cast<std::uint32_t>(x % d + 1), x >= d});
      // orbit: rotations of the word and (with star) of its star-reversal
      std::vector<Letter> rev;
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) rev.push_back({it->index, !it->starred});
      std::vector<Letter> best = letters;
      for (const auto* base : {&letters, &rev}) {
        if (base == &rev && !include_star) continue;
        for (std::size_t r = 0; r < k; ++r) {
          std::vector<Letter> rot(base->begin() + static_cast<long>(r), base->end());
          rot.insert(rot.end(), base->begin(), base->begin() + static_cast<long>(r));
          best = std::min(best, rot);
        }
      }
      out.insert(Word(best));
      std::size_t pos = 0;
      while (pos < k && ++digits[pos] == alphabet) digits[pos++] = 0;
      if (pos == k) break;
    }
  }
  return out;
}

Outcome word_machinery() {
  Checker c;
  std::size_t cases = 0;
  for (std::size_t d = 1; d <= 2; ++d) {
    for (std::size_t D = 1; D <= 6; ++D) {
      for (bool star_words : {false, true}) {
        const auto got = enumerate_canonical(d, D, star_words);
        const auto want = brute_force_words(d, D, star_words);
        c.require(got.size() == want.size() && std::set<Word>(got.begin(), got.end()) == want,
                  "enumeration differs at d=" + std::to_string(d) + ", D=" + std::to_string(D));
        ++cases;
      }
    }
  }
  Rng rng(808);
  std::uniform_int_distribution<std::size_t> deg(1, 8), dim(1, 4), arity(1, 3);
  std::uniform_int_distribution<int> bit(0, 1);
  double worst = 0;
  for (int sample = 0; sample < 1000; ++sample) {
    const std::size_t n = dim(rng), d = arity(rng);
    std::uniform_int_distribution<std::uint32_t> letter(1, static_cast<std::uint32_t>(d));
    std::vector<Letter> letters(deg(rng));
    for (auto& l : letters) l = {letter(rng), bit(rng) == 1};
    const Word w(letters);
    std::vector<Q> qs;
    std::vector<Matrix<Real>> rs;
    for (std::size_t i = 0; i < d; ++i) {
      qs.push_back(random_integer_matrix(n, n, 3, rng));
      rs.push_back(random_real_matrix(n, n, rng));
    }
    const MatrixTuple<Rational> xq(qs);
    const MatrixTuple<Real> xr(rs);
    const Rational tq = trace(eval_word(w, xq));
    const double tr = trace(eval_word(w, xr));
    std::vector<Word> orbit{star_reverse(w), canonicalize(w)};
    for (std::size_t k = 1; k < w.degree(); ++k) orbit.push_back(rotate(w, k));
    for (const auto& v : orbit) {
      c.require(trace(eval_word(v, xq)) == tq, "rational trace not invariant for " + to_string(w));
      const double diff = std::abs(trace(eval_word(v, xr)) - tr);
      worst = std::max(worst, diff);
      c.require(diff <= 1e-10, "float trace drift " + fmt(diff) + " for " + to_string(w));
    }
  }
  c.note(std::to_string(cases) + " enumeration cases; 1000 samples, max float drift " + fmt(worst));
  return c.result();
}

// ---- 9 ---------------------------------------------------------------------

Outcome matrix_units() {
  Checker c;
  Rng rng(909);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  const auto scalar = [&] {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = dim(rng);
    // rational, not just integer, conjugators
    auto p = random_invertible_integer_matrix(n, 3, rng);
    p = p * Rational(1, static_cast<long>(den(rng)));
    const auto pinv = inverse(p);
    const auto standard = UnitSystem<Rational>::standard(n);
    std::vector<Q> units;
    for (const auto& e : standard.units()) units.push_back(p * e * pinv);
    const std::string tag = "trial " + std::to_string(trial) + " (n=" + std::to_string(n) + ")";
    const auto eps = check_epsilon(units);
    c.require(eps.ok, tag + ": check_epsilon failed");
    if (!eps.ok) continue;
    const UnitSystem<Rational> u(n, units);
    c.require(units_rank(u) == n * n, tag + ": units are not independent");
    const auto center = commutant(units, n);
    c.require(center.size() == 1 && center[0] == Q::identity(n) * center[0](0, 0) && center[0](0, 0) != 0,
              tag + ": commutant is not span{I}");
    for (int pair = 0; pair < 20; ++pair) {
      std::vector<Q> ca, cb;
      for (std::size_t k = 0; k < n * n; ++k) {
        ca.push_back(Q::identity(n) * scalar());
        cb.push_back(Q::identity(n) * scalar());
      }
      c.require(theta_embedding(u, ca) * theta_embedding(u, cb) == theta_embedding(u, coefficient_product(ca, cb, n)),
                tag + ": theta is not multiplicative");
    }
  }
  c.note("50 conjugated systems, 1000 theta pairs, all exact");
  return c.result();
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 = no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "no-trace counterexample", 1.0, no_trace},
      {2, "transpose-needed counterexample", 5.0, no_transpose},
      {3, "complex plain-transpose counterexample", 60.0, complex_transpose},
      {4, "orthogonal round trip (float64)", 30.0, orthogonal_round_trip},
      {5, "GL round trip over Q", 60.0, gl_round_trip},
      {6, "fingerprint sufficiency, n=2 symmetric", 0.0, specht_sufficiency},
      {7, "Sylvester trace criterion", 0.0, sylvester_criterion},
      {8, "word enumeration and trace invariance", 0.0, word_machinery},
      {9, "matrix units", 0.0, matrix_units},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (cr.limit_seconds > 0 && secs >= cr.limit_seconds) {
      o.pass = false;
      o.detail = "runtime " + fmt(secs) + " s exceeds " + fmt(cr.limit_seconds) + " s; " + o.detail;
    }
    if (!o.pass) ++failures;
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title << "  [" << fmt(secs) << " s";
    if (cr.limit_seconds > 0) line << " / limit " << fmt(cr.limit_seconds) << " s";
    line << "]  " << o.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
