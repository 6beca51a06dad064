#pragma once

#include <ostream>

namespace h3m {

// Exit codes of the h3m command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitMalformed = 1,
    kExitPrecondition = 2,
    kExitCheckFailed = 3,
    kExitInternal = 4,
};

// Parses argv and runs one subcommand.  Output is written to `out` only when
// the command succeeds; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace h3m
