#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cpcq::cli {

/// Runs the command-line tool. `args` includes the program name. Returns 0 on
/// success, 2 on invalid input (flags, files, parameters) and 1 on an internal
/// failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpcq::cli
