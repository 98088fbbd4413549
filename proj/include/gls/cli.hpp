#pragma once

#include <iosfwd>

namespace gls::cli {

/// Exit codes of the `gls` tool.
enum ExitCode : int {
  kSuccess = 0,
  kInvalidInput = 1,  ///< malformed arguments or scenario, or a value out of range
  kIoFailure = 2,
  kOracleRejected = 3,  ///< oracle z-score above the acceptance threshold
};

inline constexpr double kOracleZThreshold = 3.0;

/// Runs one `gls` invocation; `argv[0]` is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gls::cli
