#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace z2ph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;

// Runs one subcommand. args excludes the program name. Data goes to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z2ph::cli
