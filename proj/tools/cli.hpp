#pragma once

#include <ostream>
#include <string>
#include <utility>

namespace circdet::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsageError = 2, kOracleMismatch = 3 };

// "3..7" or "6". Throws std::invalid_argument on anything else.
std::pair<int, int> parse_range(const std::string& text);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circdet::cli
