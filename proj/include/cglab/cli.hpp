#pragma once

#include <iosfwd>

namespace cglab {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,         // bad flags or malformed representation literal
  kExitPrecondition = 3,  // e.g. mixed parity where a split pair is required
  kExitViolation = 4,     // a proven bound failed: a bug, or a counterexample
  kExitIo = 5,
};

/// Runs one subcommand (tensor, weights, profile, star, check, explore).
/// Output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cglab
