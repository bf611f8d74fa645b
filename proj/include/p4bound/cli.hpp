#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace p4bound {

// Full command-line surface. Results go to `out`, diagnostics to `err`.
// Exit status: 0 success, 2 usage error, 3 rejected input.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace p4bound
