#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mgdual::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,           // syntax, range or option errors
  kDegreeMismatch = 2,  // --strict pair of a non-top-degree monomial
  kCheckFailed = 3,     // newstead / verify-rep found a violation
};

/// Runs the CLI on args (without the program name), writing to out/err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgdual::cli
