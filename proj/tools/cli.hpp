#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace symzero::cli {

inline constexpr std::string_view kVersion = "0.1.0";

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kResourceLimit = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a", "a:b", "a:b:step" or a comma-separated list of those.
std::vector<int> parse_range(std::string_view text);

}  // namespace symzero::cli
