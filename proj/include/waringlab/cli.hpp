#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace waringlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitRefused = 3;

/// Runs one subcommand. args excludes the program name. Records go to `out`
/// (or to --out), diagnostics to `err` as a single line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace waringlab
