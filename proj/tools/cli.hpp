#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsmean::cli {

enum ExitCode : int { kPass = 0, kViolation = 1, kUsageError = 2 };

/// argv[1..argc) as strings.
std::vector<std::string> collect_args(int argc, const char* const* argv);

/// Subcommands: eval, verify, sharpness, series, report. `args` excludes the
/// program name. Never throws; returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsmean::cli
