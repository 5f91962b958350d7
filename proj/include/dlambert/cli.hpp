#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dlambert {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerdictFailure = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

/// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlambert
