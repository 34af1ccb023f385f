#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclift::cli {

enum ExitCode : int { kPass = 0, kMathFailure = 1, kInputError = 2 };

/// Runs one command line (args excludes the program name). Reports go to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclift::cli
