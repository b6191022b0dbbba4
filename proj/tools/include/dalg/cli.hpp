#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dalg::cli {

enum ExitCode { kOk = 0, kNegative = 1, kInputError = 2, kBudget = 3 };

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dalg::cli
