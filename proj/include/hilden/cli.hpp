#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilden {

// Exit codes: 0 success, 1 domain error, 2 usage error, 3 resource cap.
// Payload goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilden
