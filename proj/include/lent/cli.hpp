#pragma once

#include <string>
#include <vector>

namespace lent {

// Entry point of the command-line tool. Returns the process exit code:
// 0 success, 1 verification failure, 2 usage or input error.
int run_cli(std::vector<std::string> args);

}  // namespace lent
