#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thetalab {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_identity_failure = 1, exit_usage = 2 };

/// Runs one command line (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thetalab
