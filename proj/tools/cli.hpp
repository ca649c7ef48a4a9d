#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperdef::cli {

// Exit codes: 0 verdict computed, 1 precondition or usage error, 2 internal error.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperdef::cli
