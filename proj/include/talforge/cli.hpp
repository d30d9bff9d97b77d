#pragma once

#include <iosfwd>

namespace talforge {

/* The command-line frontend.  Verbs: validate, normalize, convert,
   enumerate, trees, check.  Returns the process exit code (for `check`:
   0 equal, 1 unequal, 2 inconclusive, >2 error). */
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace talforge
