#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;          // success, SAT, good
inline constexpr int kExitNegative = 1;    // UNSAT, bad coloring
inline constexpr int kExitUsage = 2;       // bad flags, malformed input
inline constexpr int kExitNotFound = 3;    // search bound exhausted
inline constexpr int kExitBudget = 4;      // solver decision budget exhausted
inline constexpr int kExitInternal = 70;   // a construction failed its own check

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramsey::cli
