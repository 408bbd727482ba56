#pragma once

#include <iosfwd>

namespace gendef {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSelftestFailure = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitPrecondition = 4;

/// Full command-line front end; `gendef --help` lists the subcommands.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gendef
