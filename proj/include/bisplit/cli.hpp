#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bisplit {

/// Entry point of the `bisplit` tool. `args` excludes the program name.
/// Returns 0 on success, 2 on invalid input or usage, 1 on internal errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bisplit
