#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hornich::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kNumerical = 3;

// Parses and dispatches one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hornich::cli
