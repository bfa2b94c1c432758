#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmds::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
};

/// Runs one `qmds` invocation.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmds::cli
