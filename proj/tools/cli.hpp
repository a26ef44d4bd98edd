#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chartbraid::cli {

/// Exit codes: 0 success, 1 validation failure, 2 usage or parse error,
/// 3 resource limit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chartbraid::cli
