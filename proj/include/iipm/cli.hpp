#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iipm {

/// Full command dispatch behind the iipm binary. Returns the process exit
/// code: 0 all checks passed, 1 a check failed, 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iipm
