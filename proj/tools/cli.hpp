#pragma once

#include <iosfwd>

namespace simconj::cli {

/// Exit codes: 0 for any completed verdict, 1 for errors (bad input, budget
/// refusals, ...), 3 when `corpus run` finds a fixture that disagrees with
/// its expectation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCorpusMismatch = 3;

/// Runs the command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simconj::cli
