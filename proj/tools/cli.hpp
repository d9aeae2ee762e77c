#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rsc::cli {

/// Run the command line `args` (without the program name). Returns the exit
/// code: 0 success, 1 domain error or failed check, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsc::cli
