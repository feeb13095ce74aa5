#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacobsthal {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  // a falsification record was emitted
  kExitUsage = 2,
};

/// Environment variable read for the default --jobs value.
inline constexpr const char* kJobsEnvVar = "JACOBSTHAL_JOBS";

/// Runs one invocation. `args` includes the program name at index 0.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jacobsthal
