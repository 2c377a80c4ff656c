#pragma once

// Command-line front end: compute, verify, bijection and table subcommands.

#include <ostream>
#include <string>
#include <vector>

namespace eulerian {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_usage = 2,
    exit_cap_exceeded = 3,
};

/// Runs the CLI on `args` (without the program name), writing normal output
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerian
