#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arrecip::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kInputError = 2,
    kGuardOrPrecondition = 3,
};

/// Runs the command line `args` (program name excluded). Results go to
/// `out`, diagnostics to `err`; the return value is one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrecip::cli
