#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skein::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2, // bad flags, unreadable or malformed input, invalid parameters
  kAborted = 3, // term cap hit or an internal consistency check tripped
};

/// Runs the skeincalc command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace skein::cli
