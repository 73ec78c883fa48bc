#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padic::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDomain = 2,
    kDivergence = 3,
    kBracket = 4,
};

/// Runs one command line (without the program name). Results go to `out` unless --out names a
/// file; diagnostics go to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace padic::cli
