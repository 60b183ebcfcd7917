#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kring::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  ok = 0,
  argument_error = 1,
  invariant_violation = 2,
  axiom_violation = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kring::cli
