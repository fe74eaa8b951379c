#pragma once

// Named fixtures: pairs of tuples with the verdicts the decision procedures
// must reproduce. Shipped fixtures live in data/corpus/<name>/ as x.json and
// y.json (tuple files, directly usable with the CLI) plus expected.json.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simconj/tuple_io.hpp"

namespace simconj {

struct FixtureExpectation {
  bool gl_similar = false;
  /// Unset when the fixture makes no claim about orthogonal similarity.
  std::optional<bool> orth_similar;
  /// Degree bound -> equality of fingerprints with starred words.
  std::map<std::size_t, bool> fingerprint_equal_at;
  /// Degree bound -> equality of fingerprints with unstarred words only.
  std::map<std::size_t, bool> pure_fingerprint_equal_at;
  /// Ranks of X_1 and Y_1, when recorded.
  std::optional<std::pair<std::size_t, std::size_t>> ranks;
};

struct Fixture {
  std::string name;
  std::string citation;
  AnyTuple x;
  AnyTuple y;
  FixtureExpectation expected;
};

/// Throws Error if the expectation contradicts itself: orthogonal similarity
/// implies GL similarity and equal starred fingerprints at every degree, and
/// GL similarity implies equal pure fingerprints.
void validate_expectation(const FixtureExpectation& e);

/// Directory of the shipped fixtures: $SIMCONJ_CORPUS_DIR if set, otherwise
/// the path configured at build time.
std::filesystem::path default_corpus_dir();

/// Reads every fixture directory under dir (sorted by name).
std::vector<Fixture> load_fixture_dir(const std::filesystem::path& dir);

/// Positive controls generated by seeded conjugation.
std::vector<Fixture> seeded_controls(std::uint64_t seed = 0);

/// Shipped fixtures followed by the seeded controls.
std::vector<Fixture> load_corpus(const std::filesystem::path& dir = default_corpus_dir(), std::uint64_t seed = 0);

struct FixtureCheck {
  std::string label;
  bool expected = false;
  bool actual = false;
  bool pass() const { return expected == actual; }
};

struct FixtureOutcome {
  std::string name;
  std::vector<FixtureCheck> checks;
  bool pass() const;
};

/// Runs the live decision procedures (deterministic searches) against the
/// fixture's expectation.
FixtureOutcome run_fixture(const Fixture& fixture, std::uint64_t seed = 0);

}  // namespace simconj
