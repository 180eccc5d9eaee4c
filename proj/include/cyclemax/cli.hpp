#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclemax::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInputError = 2,
    kCapacity = 3,             // capacity, precondition and domain errors
    kVerificationFailed = 4,   // `verify` found a bound violation
};

/// Runs one command line. `args` excludes the program name. Output is a
/// function of the arguments and input alone unless --timing is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace cyclemax::cli
