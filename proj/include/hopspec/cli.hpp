#pragma once

#include <string>
#include <vector>

namespace hopspec {

// Full command-line driver.  Returns the process exit code:
//   0 success, 2 usage/validation error, 3 numerical failure, 4 I/O failure.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);  // args without argv[0]

}  // namespace hopspec
