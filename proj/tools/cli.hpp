#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace novikov::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kFailed = 1, kUnknown = 2, kInputError = 3 };

/// Runs the command line tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace novikov::cli
