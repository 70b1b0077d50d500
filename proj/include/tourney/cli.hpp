#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tourney::cli {

/// Exit codes of `run`.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (without the program name). Machine output goes to
/// `out`, diagnostics to `err`; `in` backs the `-` input path.
int run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err);

}
