#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coneinf {

inline constexpr const char* kToolVersion = "0.1.0";

// Runs one CLI invocation. `args` are the command-line arguments without
// the program name. Returns the exit code: 0 success, 1 computation or
// input error, 2 usage error. Output goes to `out`, diagnostics to `err`,
// so tests can drive the tool in process.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace coneinf
