#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rellandau::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification or domain failure
inline constexpr int kExitUsage = 2;    // bad flags or configuration

// Entry point shared by the executable and the tests. args[0] is the program
// name. Everything the command produces goes to `out` (or to --out files);
// diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace rellandau::app
