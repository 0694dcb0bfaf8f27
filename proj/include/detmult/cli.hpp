#pragma once

#include <ostream>

namespace detmult {

/// Runs the command line. Returns 0 on success, 1 when a computation fails
/// or a check does not hold, 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace detmult
