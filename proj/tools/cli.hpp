#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diamonds::cli {

// Exit codes: 0 success, 1 runtime, bound or network failure, 2 usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diamonds::cli
