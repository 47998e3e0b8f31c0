#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knapkern::cli {

// Exit status contract shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kInvalidInput = 2,
  kGuardExceeded = 3,
};

// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knapkern::cli
