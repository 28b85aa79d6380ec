#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sfc {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;

/// Runs the `sfc` command line (args[0] is the program name) writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sfc
