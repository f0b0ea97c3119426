#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cayleyq {

/// Exit codes: 0 success, 1 a mathematical check failed, 2 bad input.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs one CLI invocation. args[0] is the program name. JSON goes to out,
/// diagnostics to err; `in` backs "-" (the default input).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cayleyq
