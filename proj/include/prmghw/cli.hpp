#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prmghw::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kBudgetExceeded = 3,
};

/// Runs the command line `args` (program name excluded), writing normal
/// output to `out` and diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prmghw::cli
