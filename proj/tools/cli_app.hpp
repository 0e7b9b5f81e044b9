#pragma once

#include <string>
#include <vector>

namespace desirefill {

// Runs the command-line tool. Exit codes: 0 success, 1 usage error, 2 data
// error.
int run_cli(const std::vector<std::string>& args);

}  // namespace desirefill
