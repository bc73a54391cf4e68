#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclospec {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2 };

/// Runs one `cyclospec` invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclospec
