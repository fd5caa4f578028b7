#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lensspec {

/// Runs the command line; args[0] is the program name. Returns the exit code:
/// 0 success, 1 failed self-check, 2 invalid input, 3 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lensspec
