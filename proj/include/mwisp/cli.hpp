#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mwisp {

/// Command-line entry point. args[0] is the program name. Results without an
/// output path go to `out`, diagnostics to `err`. Returns 0 on success, 1 on
/// a validation error and 2 on an internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwisp
