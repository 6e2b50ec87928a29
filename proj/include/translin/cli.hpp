#pragma once

#include <string>
#include <vector>

namespace translin {

enum ExitCode : int { exit_ok = 0, exit_config = 1, exit_io = 2, exit_check = 3 };

int cli_main(int argc, char** argv);
/// Same as above; `args` excludes the program name.
int cli_main(const std::vector<std::string>& args);

}  // namespace translin
