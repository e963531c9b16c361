#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trunclin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInternal = 2;

/// Runs one command line. `args` excludes the program name. Primary output
/// goes to `out` unless --output names a file; diagnostics go to `err` as a
/// single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trunclin::cli
