#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resonaut::cli {

enum ExitCode { kOk = 0, kInvalid = 1, kVerificationFailed = 2 };

/// Runs one subcommand; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resonaut::cli
