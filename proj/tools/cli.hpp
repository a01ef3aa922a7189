#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sperner::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { kOk = 0, kPropertyFails = 1, kInputError = 2 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sperner::cli
