#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spokecycles::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kCapExceeded = 3,
  kError = 4,
};

/// Runs one invocation. args excludes the program name. JSON lines go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spokecycles::cli
