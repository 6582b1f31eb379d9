#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace transit {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,       // every check came out as expected
  kExitFailed = 1,   // some check failed or some implication was refuted
  kExitUsage = 2,    // bad arguments, unreadable or malformed input
};

/// Runs one command line (args[0] is the program name) and returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace transit
