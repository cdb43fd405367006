#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spanlf {

enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 2,
    kExitBudget = 3,
    kExitPrecondition = 4,
    kExitInternal = 5,
};

/// Entry point of the spanlf command line. Arguments exclude the program
/// name. Output goes to `out` unless --out is given.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace spanlf
