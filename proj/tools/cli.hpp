#pragma once

#include <string>
#include <vector>

namespace radialwell::cli {

/// Exit codes are a function of the outcome only.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kBadInputFile = 2,
    kDomain = 3,
    kAuditFailed = 4,
    kDeltaSource = 5,
    kNumericalFailure = 6,
};

/// Runs one CLI invocation; args excludes the program name.
int run(const std::vector<std::string>& args);

} // namespace radialwell::cli
