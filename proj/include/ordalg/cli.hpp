#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordalg {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 when every verdict passes, 1 when some
/// verdict fails and 2 on malformed input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordalg
