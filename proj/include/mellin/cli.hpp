#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mellin::cli {

// Process exit codes.
enum ExitCode : int {
  kPass = 0,
  kUsage = 1,
  kDomain = 2,
  kNoConvergence = 3,
  kCheckFailed = 4,  // computation finished but a comparison missed its tolerance
};

/// mellin-logpow <eval|verify|examples|series-check> [options]
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mellin::cli
