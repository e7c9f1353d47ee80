#pragma once

#include <ostream>

namespace rgl::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,
  kUsage = 2,
  kResourceLimit = 3,
};

/// Runs one command line. JSON goes to `out`, human-readable messages to
/// `err`. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rgl::cli
