#pragma once

#include <iosfwd>

namespace cmm {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitUnstable = 3,
    kExitSolver = 4,
    kExitIo = 5,
};

/// Command-line entry point; diagnostics go to `err`, results to `out`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cmm
