#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvd {

// Runs the command line given argv-style arguments (without the program
// name). Returns the process exit code: 0 success, 1 verification failure or
// counterexample found, 2 parse/input error, 3 capacity exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvd
