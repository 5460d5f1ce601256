#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orbitforge::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kCheckFailed = 3;

// Runs the orbitforge command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitforge::cli
