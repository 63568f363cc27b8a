#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extalg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name): derive, verify or eval.
/// Results go to `out`, diagnostics to `err`; returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extalg::cli
