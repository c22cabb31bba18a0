#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubit {

// Runs the command line (args excludes the program name). Results go to
// out, one-line diagnostics to err. Returns the process exit code:
// 0 success, 1 operation failed, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubit
