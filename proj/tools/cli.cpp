#include "cli.hpp"

#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "simconj/simconj.hpp"

namespace simconj::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

template <Field T>
ordered_json value_json(const T& x) {
  if constexpr (std::same_as<T, Rational>) {
    return format_rational(x);
  } else if constexpr (std::same_as<T, Real>) {
    return x;
  } else {
    return ordered_json::array({x.real(), x.imag()});
  }
}

template <Field T>
ordered_json matrix_json(const Matrix<T>& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(value_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Calls f(x, y) with both tuples of the same concrete kind.
template <class F>
void with_pair(const AnyTuple& x, const AnyTuple& y, F&& f) {
  std::visit(
      [&](const auto& xt) {
        using Tuple = std::decay_t<decltype(xt)>;
        const auto* yt = std::get_if<Tuple>(&y);
        if (!yt) throw KindMismatch("input files use different field kinds");
        if (xt.dim() != yt->dim() || xt.arity() != yt->arity()) {
          throw ShapeError("input files differ in n (" + std::to_string(xt.dim()) + " vs " +
                           std::to_string(yt->dim()) + ") or d (" + std::to_string(xt.arity()) + " vs " +
                           std::to_string(yt->arity()) + ")");
        }
        f(xt, *yt);
      },
      x);
}

struct FingerprintArgs {
  std::string file;
  std::optional<std::size_t> degree;
  bool no_star = false;
  std::uint64_t budget = kDefaultEnumerationBudget;
  bool json = false;
};

void cmd_fingerprint(const FingerprintArgs& a, std::ostream& out) {
  const AnyTuple x = read_tuple_file(a.file);
  std::visit(
      [&](const auto& t) {
        const std::size_t degree = a.degree.value_or(t.dim() * t.dim());
        const auto fp = fingerprint(t, degree, !a.no_star, a.budget);
        if (a.json) {
          ordered_json j;
          j["field"] = std::string(to_string(t.field_kind().kind));
          j["star"] = std::string(to_string(t.star_mode()));
          j["d"] = fp.arity;
          j["degree_bound"] = fp.degree_bound;
          j["include_star"] = fp.include_star;
          j["entries"] = ordered_json::array();
          for (const auto& [w, v] : fp.entries) j["entries"].push_back({{"word", to_string(w)}, {"value", value_json(v)}});
          out << j.dump(2) << '\n';
        } else {
          for (const auto& [w, v] : fp.entries) out << to_string(w) << " = " << format_value(v) << '\n';
        }
      },
      x);
}

struct SimilarArgs {
  std::string file_x;
  std::string file_y;
  bool orthogonal = false;
  std::string mode = "deterministic";
  std::uint64_t seed = 0;
  std::size_t trials = 64;
  std::int64_t sample_bound = 1000;
  std::uint64_t grid_budget = 10'000'000;
  bool witness = false;
  bool json = false;
};

template <Field T>
void print_witness_block(std::ostream& out, const Matrix<T>& m, StarMode star) {
  out << "witness:\n" << format_matrix(m, star);
}

void cmd_similar(const SimilarArgs& a, std::ostream& out) {
  const AnyTuple x = read_tuple_file(a.file_x);
  const AnyTuple y = read_tuple_file(a.file_y);
  SearchOptions search;
  search.seed = a.seed;
  search.trials = a.trials;
  search.sample_bound = a.sample_bound;
  search.grid_budget = a.grid_budget;
  const SearchMode mode = a.mode == "monte-carlo" ? SearchMode::MonteCarlo : SearchMode::Deterministic;

  with_pair(x, y, [&](const auto& xt, const auto& yt) {
    using T = typename std::decay_t<decltype(xt[0])>::value_type;
    ordered_json j;
    if (!a.orthogonal) {
      const auto r = gl_similar(xt, yt, mode, search);
      j["verdict"] = std::string(to_string(r.verdict));
      j["relation"] = "P X_i = Y_i P";
      j["space_dimension"] = r.space_dimension;
      if (a.json) {
        if (a.witness && r.witness) j["witness"] = matrix_json(*r.witness);
        out << j.dump(2) << '\n';
        return;
      }
      out << to_string(r.verdict) << '\n';
      if (a.witness && r.witness) print_witness_block(out, *r.witness, xt.star_mode());
      return;
    }

    OrthogonalOptions opts;
    opts.mode = mode;
    opts.search = search;
    const auto r = orthogonal_witness(xt, yt, opts);
    const bool unavailable = r.verdict == OrthogonalVerdict::ExactWitnessUnavailable;
    j["verdict"] = std::string(to_string(r.verdict));
    j["relation"] = "O X_i O* = Y_i";
    if (unavailable) j["note"] = "exact-witness-unavailable";
    j["space_dimension"] = r.space_dimension;
    if (a.json) {
      if (a.witness) {
        if (r.witness) {
          j["witness"] = matrix_json(r.witness->o);
          j["residual_orth"] = r.witness->residual_orth;
          j["residual_conj"] = r.witness->residual_conj;
        } else if (r.float_witness) {
          j["witness"] = matrix_json(r.float_witness->o);
          j["residual_orth"] = r.float_witness->residual_orth;
          j["residual_conj"] = r.float_witness->residual_conj;
        }
      }
      out << j.dump(2) << '\n';
      return;
    }
    out << to_string(r.verdict) << '\n';
    if (unavailable) out << "note: exact-witness-unavailable\n";
    if (!a.witness) return;
    if (r.witness) {
      print_witness_block(out, r.witness->o, xt.star_mode());
      out << "residual_orth = " << format_real(r.witness->residual_orth) << '\n';
      out << "residual_conj = " << format_real(r.witness->residual_conj) << '\n';
    } else if (r.float_witness) {
      print_witness_block(out, r.float_witness->o, StarMode::Transpose);
      out << "residual_orth = " << format_real(r.float_witness->residual_orth) << '\n';
      out << "residual_conj = " << format_real(r.float_witness->residual_conj) << '\n';
    }
    (void)sizeof(T);
  });
}

struct UnitsArgs {
  std::string file;
  bool center = false;
  bool json = false;
};

void cmd_units(const UnitsArgs& a, std::ostream& out) {
  const AnyTuple units = read_tuple_file(a.file);
  std::visit(
      [&](const auto& t) {
        const auto report = check_epsilon(t.matrices());
        ordered_json j;
        std::string line;
        if (report.ok) {
          j["epsilon"] = "ok";
          line = "epsilon: ok";
        } else {
          const auto& v = *report.violation;
          const std::string at = "(" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," +
                                 std::to_string(v.s + 1) + "," + std::to_string(v.t + 1) + ")";
          j["epsilon"] = "violated";
          j["at"] = {v.i + 1, v.j + 1, v.s + 1, v.t + 1};
          j["reason"] = v.reason == EpsilonViolation::Reason::ZeroUnit ? "zero-unit" : "relation";
          line = "epsilon: violated at (i,j,s,t)=" + at +
                 (v.reason == EpsilonViolation::Reason::ZeroUnit ? " (zero unit)" : "");
        }
        std::vector<std::decay_t<decltype(t[0])>> center;
        if (a.center && report.ok) center = commutant(t.matrices(), t.dim());
        if (a.json) {
          if (a.center && report.ok) {
            j["center_dimension"] = center.size();
            j["center"] = ordered_json::array();
            for (const auto& m : center) j["center"].push_back(matrix_json(m));
          }
          out << j.dump(2) << '\n';
          return;
        }
        out << line << '\n';
        if (a.center && report.ok) {
          out << "center: dimension " << center.size() << '\n';
          using T = typename std::decay_t<decltype(t[0])>::value_type;
          out << format_tuple(MatrixTuple<T>(center, t.star_mode()));
        }
      },
      units);
}

struct SylvesterArgs {
  std::string file_a;
  std::string file_b;
  std::string file_c;
  bool unique = false;
  bool json = false;
};

void cmd_sylvester(const SylvesterArgs& a, std::ostream& out) {
  const AnyMatrix ma = read_matrix_file(a.file_a);
  const AnyMatrix mb = read_matrix_file(a.file_b);
  std::optional<AnyMatrix> mc;
  if (!a.file_c.empty()) mc = read_matrix_file(a.file_c);
  if (!a.unique && !mc) throw Error("sylvester: give a right-hand side file C or --unique");

  std::visit(
      [&](const auto& am) {
        using M = std::decay_t<decltype(am)>;
        const auto* bm = std::get_if<M>(&mb.matrix);
        if (!bm) throw KindMismatch("A and B use different field kinds");
        ordered_json j;
        if (a.unique) {
          const bool u = sylvester_unique(am, *bm);
          j["unique"] = u;
          if (!a.json) out << "unique: " << (u ? "true" : "false") << '\n';
        }
        if (mc) {
          const auto* cm = std::get_if<M>(&mc->matrix);
          if (!cm) throw KindMismatch("C uses a different field kind");
          const auto x = sylvester_solve(am, *bm, *cm);
          if (x) {
            j["solution"] = matrix_json(*x);
            if (!a.json) out << "X = " << to_string(*x) << '\n';
          } else {
            j["solution"] = nullptr;
            if (!a.json) out << "no solution\n";
          }
        }
        if (a.json) out << j.dump(2) << '\n';
      },
      ma.matrix);
}

struct CorpusArgs {
  std::string dir;
  std::uint64_t seed = 0;
  bool json = false;
};

int cmd_corpus_list(const CorpusArgs& a, std::ostream& out) {
  const auto fixtures = load_corpus(a.dir.empty() ? default_corpus_dir() : std::filesystem::path(a.dir), a.seed);
  for (const auto& f : fixtures) {
    const auto kind = field_kind(f.x);
    out << f.name << "  [" << to_string(kind.kind) << ", " << to_string(kind.star) << ", n=" << tuple_dim(f.x)
        << ", d=" << tuple_arity(f.x) << "]  " << f.citation << '\n';
  }
  return kExitOk;
}

int cmd_corpus_run(const CorpusArgs& a, std::ostream& out) {
  const auto fixtures = load_corpus(a.dir.empty() ? default_corpus_dir() : std::filesystem::path(a.dir), a.seed);
  bool all = true;
  ordered_json j = ordered_json::array();
  for (const auto& f : fixtures) {
    const auto outcome = run_fixture(f, a.seed);
    all = all && outcome.pass();
    ordered_json fj;
    fj["name"] = outcome.name;
    fj["pass"] = outcome.pass();
    fj["checks"] = ordered_json::array();
    for (const auto& c : outcome.checks) {
      fj["checks"].push_back({{"label", c.label}, {"expected", c.expected}, {"actual", c.actual}});
    }
    j.push_back(std::move(fj));
    if (a.json) continue;
    out << (outcome.pass() ? "PASS " : "FAIL ") << outcome.name << '\n';
    for (const auto& c : outcome.checks) {
      out << "  " << (c.pass() ? "ok   " : "FAIL ") << c.label << ": expected " << (c.expected ? "true" : "false")
          << ", got " << (c.actual ? "true" : "false") << '\n';
    }
  }
  if (a.json) out << j.dump(2) << '\n';
  return all ? kExitOk : kExitCorpusMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simultaneous similarity of matrix tuples: trace fingerprints, intertwiners, orthogonal witnesses"};
  app.require_subcommand(1);

  FingerprintArgs fp;
  auto* fp_cmd = app.add_subcommand("fingerprint", "Print tr(w(X, X*)) for every canonical word up to degree D");
  fp_cmd->add_option("file", fp.file, "Tuple file")->required();
  fp_cmd->add_option("-D,--degree", fp.degree, "Degree bound (default n^2)")->check(CLI::PositiveNumber);
  fp_cmd->add_flag("--no-star", fp.no_star, "Only words in the unstarred letters");
  fp_cmd->add_option("--budget", fp.budget, "Maximum raw word count alphabet^D")->capture_default_str();
  fp_cmd->add_flag("--json", fp.json, "JSON output");

  SimilarArgs sim;
  auto* sim_cmd = app.add_subcommand("similar", "Decide simultaneous (orthogonal) similarity of two tuples");
  sim_cmd->add_option("x", sim.file_x, "Tuple file X")->required();
  sim_cmd->add_option("y", sim.file_y, "Tuple file Y")->required();
  sim_cmd->add_flag("--orthogonal", sim.orthogonal, "Orthogonal / unitary similarity O X_i O* = Y_i");
  sim_cmd->add_option("--mode", sim.mode, "Search mode")
      ->check(CLI::IsMember({"monte-carlo", "deterministic"}))
      ->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
  sim_cmd->add_option("--trials", sim.trials, "Monte Carlo trials")->capture_default_str()->check(CLI::PositiveNumber);
  sim_cmd->add_option("--sample-bound", sim.sample_bound, "Monte Carlo coefficient bound")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--grid-budget", sim.grid_budget, "Deterministic grid budget")->capture_default_str();
  sim_cmd->add_flag("--witness", sim.witness, "Print the witness matrix");
  sim_cmd->add_flag("--json", sim.json, "JSON output");

  UnitsArgs units;
  auto* units_cmd = app.add_subcommand("units", "Check matrix-unit relations of a file of N^2 matrices");
  units_cmd->add_option("file", units.file, "Tuple file with d = N^2 matrices, a_ij at index (i-1)*N + (j-1)")
      ->required();
  units_cmd->add_flag("--center", units.center, "Print a basis of the commutant of the units");
  units_cmd->add_flag("--json", units.json, "JSON output");

  SylvesterArgs syl;
  auto* syl_cmd = app.add_subcommand("sylvester", "Solve A X - X B = C and/or test unique solvability");
  syl_cmd->add_option("a", syl.file_a, "Matrix file A (n x n)")->required();
  syl_cmd->add_option("b", syl.file_b, "Matrix file B (m x m)")->required();
  syl_cmd->add_option("c", syl.file_c, "Matrix file C (n x m)");
  syl_cmd->add_flag("--unique", syl.unique, "Report whether the solution is unique for every C");
  syl_cmd->add_flag("--json", syl.json, "JSON output");

  CorpusArgs corpus;
  auto* corpus_cmd = app.add_subcommand("corpus", "Bundled fixtures");
  corpus_cmd->require_subcommand(1);
  corpus_cmd->add_option("--dir", corpus.dir, "Fixture directory (default: bundled corpus)");
  corpus_cmd->add_option("--seed", corpus.seed, "Seed for generated controls and searches")->capture_default_str();
  corpus_cmd->add_flag("--json", corpus.json, "JSON output (run only)");
  auto* corpus_list = corpus_cmd->add_subcommand("list", "List fixtures");
  auto* corpus_run = corpus_cmd->add_subcommand("run", "Run every fixture against the live procedures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*fp_cmd) cmd_fingerprint(fp, out);
    if (*sim_cmd) cmd_similar(sim, out);
    if (*units_cmd) cmd_units(units, out);
    if (*syl_cmd) cmd_sylvester(syl, out);
    if (*corpus_list) return cmd_corpus_list(corpus, out);
    if (*corpus_run) return cmd_corpus_run(corpus, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace simconj::cli
