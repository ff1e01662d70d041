#pragma once

#include <iosfwd>

namespace ehrenfest::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitOffGrid = 3,
  kExitIo = 4,
};

/// Runs the command line; `out` receives results, `err` diagnostics.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ehrenfest::cli
