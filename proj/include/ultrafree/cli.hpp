#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ultrafree {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_budget = 3 };

/// Runs the command line `args` (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ultrafree
