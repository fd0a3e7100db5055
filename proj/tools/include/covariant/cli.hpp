#pragma once

#include <iosfwd>

namespace covariant {

/// Exit codes of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitTheoremFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on argv. Reports go to `out` (or --out), diagnostics to
/// `err` as a single line.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace covariant
