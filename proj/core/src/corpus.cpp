#include "simconj/corpus.hpp"

#include <algorithm>
#include <cstdlib>

#include <nlohmann/json.hpp>

#include "simconj/intertwiner.hpp"
#include "simconj/orthogonal.hpp"
#include "simconj/random.hpp"
#include "simconj/words.hpp"

#ifndef SIMCONJ_DEFAULT_CORPUS_DIR
#define SIMCONJ_DEFAULT_CORPUS_DIR "data/corpus"
#endif

namespace simconj {

using nlohmann::json;

void validate_expectation(const FixtureExpectation& e) {
  if (e.orth_similar.value_or(false)) {
    if (!e.gl_similar) throw Error("fixture claims orthogonal but not GL similarity");
    for (const auto& [degree, equal] : e.fingerprint_equal_at) {
      if (!equal) throw Error("fixture claims orthogonal similarity with unequal fingerprints");
    }
  }
  if (e.gl_similar) {
    for (const auto& [degree, equal] : e.pure_fingerprint_equal_at) {
      if (!equal) throw Error("fixture claims GL similarity with unequal pure fingerprints");
    }
    if (e.ranks && e.ranks->first != e.ranks->second) throw Error("fixture claims GL similarity with unequal ranks");
  }
}

std::filesystem::path default_corpus_dir() {
  if (const char* env = std::getenv("SIMCONJ_CORPUS_DIR"); env && *env) return env;
  return SIMCONJ_DEFAULT_CORPUS_DIR;
}

namespace {

std::map<std::size_t, bool> degree_map(const json& j, const char* key) {
  std::map<std::size_t, bool> out;
  if (!j.contains(key)) return out;
  for (const auto& [k, v] : j.at(key).items()) out.emplace(std::stoul(k), v.get<bool>());
  return out;
}

FixtureExpectation parse_expectation(const json& j) {
  FixtureExpectation e;
  e.gl_similar = j.at("gl_similar").get<bool>();
  if (j.contains("orth_similar")) e.orth_similar = j["orth_similar"].get<bool>();
  e.fingerprint_equal_at = degree_map(j, "fingerprint_equal_at");
  e.pure_fingerprint_equal_at = degree_map(j, "pure_fingerprint_equal_at");
  if (j.contains("ranks")) e.ranks = {j["ranks"].at(0).get<std::size_t>(), j["ranks"].at(1).get<std::size_t>()};
  return e;
}

Fixture read_fixture(const std::filesystem::path& dir) {
  json meta;
  try {
    meta = json::parse(read_text_file(dir / "expected.json"));
  } catch (const json::exception& e) {
    throw ParseError((dir / "expected.json").string() + ": " + e.what());
  }
  Fixture f;
  f.name = meta.value("name", dir.filename().string());
  f.citation = meta.value("citation", "");
  try {
    f.expected = parse_expectation(meta);
  } catch (const json::exception& e) {
    throw ParseError((dir / "expected.json").string() + ": " + e.what());
  }
  f.x = read_tuple_file(dir / "x.json");
  f.y = read_tuple_file(dir / "y.json");
  validate_expectation(f.expected);
  return f;
}

template <Field T>
MatrixTuple<T> conjugated(const MatrixTuple<T>& x, const Matrix<T>& left, const Matrix<T>& right) {
  return conjugate_tuple(x, left, right);
}

}  // namespace

std::vector<Fixture> load_fixture_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error("corpus directory '" + dir.string() + "' not found");
  std::vector<std::filesystem::path> dirs;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_directory() && std::filesystem::exists(entry.path() / "expected.json")) dirs.push_back(entry.path());
  }
  std::sort(dirs.begin(), dirs.end());
  std::vector<Fixture> out;
  for (const auto& d : dirs) out.push_back(read_fixture(d));
  return out;
}

std::vector<Fixture> seeded_controls(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Fixture> out;

  {
    std::vector<Matrix<Rational>> ms;
    for (int i = 0; i < 2; ++i) ms.push_back(random_integer_matrix(3, 3, 3, rng));
    const MatrixTuple<Rational> x(ms);
    const auto p = random_invertible_integer_matrix(3, 2, rng);
    Fixture f{"seeded_gl_rational", "random integer pair conjugated by a random integer matrix", x,
              conjugated(x, p, inverse(p)), {}};
    f.expected.gl_similar = true;
    f.expected.pure_fingerprint_equal_at = {{3, true}};
    out.push_back(std::move(f));
  }
  {
    std::vector<Matrix<Rational>> ms;
    for (int i = 0; i < 2; ++i) ms.push_back(random_integer_matrix(3, 3, 3, rng));
    const MatrixTuple<Rational> x(ms);
    const auto q = random_rational_orthogonal(3, 3, rng);
    Fixture f{"seeded_orthogonal_rational", "random integer pair conjugated by a rational rotation", x,
              conjugated(x, q, transpose(q)), {}};
    f.expected.gl_similar = true;
    f.expected.orth_similar = true;
    f.expected.fingerprint_equal_at = {{2, true}, {3, true}};
    f.expected.pure_fingerprint_equal_at = {{3, true}};
    out.push_back(std::move(f));
  }
  {
    std::vector<Matrix<Real>> ms;
    for (int i = 0; i < 2; ++i) ms.push_back(random_real_matrix(4, 4, rng));
    const MatrixTuple<Real> x(ms);
    const auto o = random_givens_orthogonal(4, 8, rng);
    Fixture f{"seeded_orthogonal_float", "random real pair conjugated by a product of Givens rotations", x,
              conjugated(x, o, transpose(o)), {}};
    f.expected.gl_similar = true;
    f.expected.orth_similar = true;
    f.expected.fingerprint_equal_at = {{2, true}, {3, true}};
    out.push_back(std::move(f));
  }
  {
    std::vector<Matrix<Complex>> ms;
    for (int i = 0; i < 2; ++i) {
      const auto re = random_real_matrix(3, 3, rng);
      const auto im = random_real_matrix(3, 3, rng);
      Matrix<Complex> m(3, 3);
      for (std::size_t k = 0; k < 9; ++k) m.entries()[k] = Complex(re.entries()[k], im.entries()[k]);
      ms.push_back(std::move(m));
    }
    const MatrixTuple<Complex> x(ms);
    const auto g = random_givens_orthogonal(3, 6, rng);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    Matrix<Complex> u(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      const Complex phase = std::polar(1.0, angle(rng));
      for (std::size_t j = 0; j < 3; ++j) u(i, j) = g(i, j) * phase;
    }
    Fixture f{"seeded_unitary_complex", "random complex pair conjugated by a unitary matrix", x,
              conjugated(x, u, star(u)), {}};
    f.expected.gl_similar = true;
    f.expected.orth_similar = true;
    f.expected.fingerprint_equal_at = {{2, true}, {3, true}};
    out.push_back(std::move(f));
  }
  for (const auto& f : out) validate_expectation(f.expected);
  return out;
}

std::vector<Fixture> load_corpus(const std::filesystem::path& dir, std::uint64_t seed) {
  auto out = load_fixture_dir(dir);
  for (auto& f : seeded_controls(seed)) out.push_back(std::move(f));
  return out;
}

bool FixtureOutcome::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.pass(); });
}

FixtureOutcome run_fixture(const Fixture& fixture, std::uint64_t seed) {
  FixtureOutcome out{fixture.name, {}};
  std::visit(
      [&](const auto& x) {
        using Tuple = std::decay_t<decltype(x)>;
        const auto* yp = std::get_if<Tuple>(&fixture.y);
        if (!yp) throw KindMismatch("fixture '" + fixture.name + "': X and Y have different field kinds");
        const auto& y = *yp;
        const auto& e = fixture.expected;
        SearchOptions search;
        search.seed = seed;

        const auto gl = gl_similar(x, y, SearchMode::Deterministic, search);
        out.checks.push_back({"gl_similar", e.gl_similar, gl.verdict == SimilarityVerdict::Similar});
        if (e.orth_similar) {
          OrthogonalOptions opts;
          opts.search = search;
          const auto orth = orthogonal_witness(x, y, opts);
          out.checks.push_back({"orth_similar", *e.orth_similar, orth.equivalent()});
        }
        for (const auto& [degree, equal] : e.fingerprint_equal_at) {
          const auto cmp = fingerprints_equal(fingerprint(x, degree, true), fingerprint(y, degree, true));
          out.checks.push_back({"fingerprint_equal D=" + std::to_string(degree), equal, cmp.equal});
        }
        for (const auto& [degree, equal] : e.pure_fingerprint_equal_at) {
          const auto cmp = fingerprints_equal(fingerprint(x, degree, false), fingerprint(y, degree, false));
          out.checks.push_back({"pure_fingerprint_equal D=" + std::to_string(degree), equal, cmp.equal});
        }
        if (e.ranks) {
          out.checks.push_back({"rank X1 = " + std::to_string(e.ranks->first), true, rank(x[0]) == e.ranks->first});
          out.checks.push_back({"rank Y1 = " + std::to_string(e.ranks->second), true, rank(y[0]) == e.ranks->second});
        }
      },
      fixture.x);
  return out;
}

}  // namespace simconj
