#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eszk::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kOk = 0,
    kNegative = 1,    ///< predicate false / nothing found / not verified
    kUsage = 2,       ///< usage, parse, input and precondition errors
    kCapability = 3,  ///< enumeration budget or retry budget exhausted
    kInternal = 4,
};

/// Runs one subcommand. `args` excludes the program name. Exactly one
/// report goes to `out`; diagnostics go to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eszk::cli
