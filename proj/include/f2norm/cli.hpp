#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace f2norm {

enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,
    kExitBadInput = 2,
    kExitResource = 3,
};

/// Entry point of the f2norm tool. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace f2norm
