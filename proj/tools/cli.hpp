#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitconf::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the command line given without the program name. Output goes to
/// out, diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitconf::cli
