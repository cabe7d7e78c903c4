#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbindex {

// Full command-line surface; returns the process exit code.
//   0  success
//   2  verification mismatch (engine vs oracle, grouping, integrality, ...)
//   3  invalid model or parameters
//   64 usage error
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbindex
