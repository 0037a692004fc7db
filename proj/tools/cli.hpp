#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qaff {

// Runs one CLI invocation (args excludes the program name).
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qaff
