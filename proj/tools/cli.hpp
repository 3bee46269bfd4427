#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hnnembed::cli {

// Exit codes: 0 success or true verdict, 1 false verdict, 2 usage, parse or
// precondition error.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;
inline constexpr int kError = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hnnembed::cli
