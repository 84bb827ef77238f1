#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flipbraid::cli {

enum ExitCode : int {
    kOk = 0,
    kMathFailure = 1,
    kUsage = 2,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flipbraid::cli
