#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace figfig {

/// Exit codes of run_cli.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
};

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out` unless --out is given; diagnostics go to `err`.
///
/// Subcommands: gen, coeffs, approx, remainder, verify, compare.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace figfig
