#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace improper::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// Runs the command line front-end. args excludes the program name.
/// Reports are line-delimited JSON written to `out` (or --out).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace improper::cli
