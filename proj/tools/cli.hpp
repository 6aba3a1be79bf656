#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bestprox::cli {

enum ExitStatus : int { kSuccess = 0, kNegative = 1, kInputError = 2 };

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bestprox::cli
