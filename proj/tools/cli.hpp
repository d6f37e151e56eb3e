#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sytcount::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 2,  // also used for command-line usage errors
    kMethodMismatch = 3,
    kMemoLimit = 4,
    kMismatch = 5,
    kMonteCarloGate = 6,
};

/// Runs `sytcount <args...>` (args excludes the program name). Results go to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sytcount::cli
