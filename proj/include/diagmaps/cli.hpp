#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diagmaps::cli {

// Exit codes: 0 success, 1 domain error, 2 input or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diagmaps::cli
