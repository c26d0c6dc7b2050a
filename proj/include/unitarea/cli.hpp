#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unitarea {

// Exit codes: 0 success, 1 a checked invariant failed, 2 usage or input error.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unitarea
