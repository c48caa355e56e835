#pragma once

#include <iosfwd>

namespace idemring {

/// Exit statuses of the command line front end.
enum ExitCode : int {
  exit_ok = 0,
  exit_input = 2,        // bad file, bad tables, unmet precondition, size cap
  exit_discrepancy = 3,  // crosscheck found a disagreement
};

/// Runs one command. Reports go to `out` (or the -o file), diagnostics to
/// `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace idemring
