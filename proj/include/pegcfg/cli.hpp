#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pegcfg::cli {

enum ExitCode : int {
    kOk = 0,          // success, or the checked property holds
    kFails = 1,       // property fails or languages differ
    kUsage = 2,       // usage, parse or precondition error
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pegcfg::cli
