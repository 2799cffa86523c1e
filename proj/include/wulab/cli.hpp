#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wulab {

/// Runs the command line `args` (args[0] is the program name). Returns 0 on
/// success, 1 when a checked property fails, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wulab
