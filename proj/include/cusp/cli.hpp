// Command-line front end. Exposed as a library function so the test suite
// can drive subcommands in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cusp {

// args excludes the program name. Returns the process exit code:
// 0 success, 2 usage/config error, 3 numeric failure.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace cusp
