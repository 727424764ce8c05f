#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpa::cli {

/// Exit codes beyond the 0/1/2 verdicts.
inline constexpr int kUsage = 64;
inline constexpr int kBadInput = 65;

/// Runs the command line `args` (without the program name).
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace fpa::cli
