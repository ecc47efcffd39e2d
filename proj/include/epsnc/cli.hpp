#pragma once

#include <iosfwd>

namespace epsnc {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInputError = 2,
  kExitLimitExceeded = 3,
  kExitLatticeViolation = 4,
};

/// Entry point of the `epsnc` tool with injectable streams, so the CLI can be
/// driven from tests without spawning a process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace epsnc
