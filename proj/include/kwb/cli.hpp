#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kwb {

// Runs one CLI invocation (argv without the program name) and writes the
// report to `out`, diagnostics to `err`.  Returns the process exit code:
//   0 success, 2 user/input error, 3 precondition error, 4 resource guard.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace kwb
