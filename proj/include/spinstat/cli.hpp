#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinstat {

/// Runs one CLI invocation.  `args` are argv-style arguments without the
/// program name.  Returns the process exit code: 0 on success, 1 on invalid
/// input, 2 on a verification mismatch (including a starved quadrature).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace spinstat
