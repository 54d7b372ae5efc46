#pragma once

#include <iosfwd>

namespace simplexbound {

// Exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPositivity = 3;
inline constexpr int kExitInternal = 4;

/// Entry point of the `simplexbound` tool; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simplexbound
