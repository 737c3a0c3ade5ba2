#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ducci::cli {

enum ExitCode : int {
    kOk = 0,
    kPropertyFailed = 1,
    kValidation = 2,
    kInfeasible = 3,
};

// Parses argv (program name first) and runs the command. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ducci::cli
