#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treetropy::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kBadInput = 2;

// Runs one command line (without the program name). `in` backs the "-"
// pattern argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace treetropy::cli
