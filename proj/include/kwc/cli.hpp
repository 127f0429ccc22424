#pragma once

#include <iosfwd>

namespace kwc::cli {

/// Exit codes: 0 success, 1 a checked invariant or bound failed, 2 bad input, 3 resource cap hit.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

/// Parses argv (argv[0] is the program name), runs the subcommand and writes CSV to `out`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kwc::cli
