#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fill {

// Full command-line surface; returns the process exit code (0 success,
// 1 internal error, 2 invalid input).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fill
