#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csq::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
};

/// Runs the command line `args` (without the program name). JSON goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csq::cli
