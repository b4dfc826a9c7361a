#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ucube::cli {

/// Environment variable supplying the default --seed.
inline constexpr const char* kSeedEnvVar = "UCUBE_SEED";

enum ExitCode : int {
  kOk = 0,
  kAssertedFailure = 1,
  kUsageError = 2,
};

/// Runs one invocation; `args` excludes the program name. Standard output is
/// written only when the command succeeds (exit 0 or 1).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ucube::cli
