#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace farey::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;     // bad slope, violated precondition
inline constexpr int kResourceError = 2;   // LadderTooLarge, EnumerationOverflow, OracleBudget
inline constexpr int kUsageError = 64;
inline constexpr int kOracleMismatch = 70; // --oracle found a disagreement

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace farey::cli
