#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bptk::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParseError = 2,
    kHardModel = 3,
    kOracleBound = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bptk::cli
