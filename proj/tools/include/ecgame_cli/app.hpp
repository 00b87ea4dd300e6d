#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ecgame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitConsistency = 3;

/// Runs one command line (without the program name); returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ecgame::cli
