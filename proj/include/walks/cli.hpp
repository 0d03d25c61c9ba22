// The `walks` command line: asymptotics, count, verify, ode-check and
// recurrence-check subcommands.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace walks {

enum ExitCode : int {
  exit_ok = 0,
  exit_verification_failed = 1,
  exit_usage = 2,
  exit_resource = 3,
};

/// Runs one command. `args` excludes the program name. The DP cell budget
/// defaults to the WALKS_DP_CELL_BUDGET environment variable when set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walks
