#pragma once

#include <string>
#include <vector>

namespace superhomology {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDiff = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args excludes the program name). Never throws.
/// SUPERHOMOLOGY_THREADS supplies the default thread count.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace superhomology
