#pragma once

#include <string>
#include <vector>

namespace pgk {

// Entry point shared by the pgk binary and the CLI tests. Returns the
// process exit code: 0 success, 1 verification failure, 2 usage or input
// error.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

}
