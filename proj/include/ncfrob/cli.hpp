#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncfrob::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs the ncfrob command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncfrob::cli
