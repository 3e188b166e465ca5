#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dynwalk::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kUsage = 2,
  kPrecondition = 3,
  kInternal = 4,
};

/// Runs `dynwalk` with `args` (program name excluded) and returns the exit
/// code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dynwalk::cli
