#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covpeb::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kInputError = 2,
  kLimitExceeded = 3,
  kInternalError = 4,
};

/// Runs one command line (args excludes the program name). JSON goes to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covpeb::cli
