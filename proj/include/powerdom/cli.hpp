#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powerdom::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,        // bad arguments or unreadable/malformed input
  kResource = 2,     // solver work limit hit
  kConsistency = 3,  // a theorem-backed check failed
};

/// Runs one `powerdom` invocation. `args` excludes the program name; `in`
/// backs the "-" input path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace powerdom::cli
