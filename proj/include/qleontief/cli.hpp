#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qleontief::cli {

enum ExitCode : int { pass = 0, math_failure = 1, input_error = 2 };

/// Runs one command line (args[0] is the program name). Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qleontief::cli
