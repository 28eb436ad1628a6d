#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace hypsum {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,        // every verification matched
    kExitMismatch = 1,  // at least one mismatch, listed on the error stream
    kExitUsage = 2,     // bad flags, bad ranges, or a grid outside the domain
};

/// Runs the `verify`, `eval` or `table` subcommand. `args` excludes the
/// program name. Tables go to `out` (or the --out file), diagnostics to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hypsum
