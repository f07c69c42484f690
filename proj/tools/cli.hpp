#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nakayama {

/// Runs the command line tool on `args` (without the program name).
/// Returns the process exit code: 0 ok, 1 input error, 2 verification failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nakayama
