#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace infoscale::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

/// Runs the command line args (args[0] is the program name). The result is
/// written once, to --out or to out; diagnostics go to err. Returns 0, 2 or 3.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infoscale::cli
