// Command-line front end. Output is canonical JSON on `out`, diagnostics on
// `err`. Exit codes: 0 ok, 1 verification failed, 2 usage or precondition
// error, 3 budget exceeded.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgres::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgres::cli
