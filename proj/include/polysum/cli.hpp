#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polysum::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the polysum command line. args excludes the program name.
///
///   closed-form --n N [--factored]
///   sum --expr STR [--lo L --hi H]
///   verify --suite S --max-n N [--max-m M]
///   bench --n N --m M1,M2,... [--reps R] [--csv FILE]
///   global: --json
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polysum::cli
