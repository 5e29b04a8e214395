#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semipolar::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kConfiguration = 2,
  kHorizonRefused = 3,
  kFailedChecksBase = 10,
};

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace semipolar::cli
