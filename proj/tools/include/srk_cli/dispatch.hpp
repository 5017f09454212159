#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srk_cli {

/// Runs one command given its arguments (without the program name) and
/// writes results to `out` and diagnostics to `err`. Returns 0 on
/// success, 1 on usage or domain errors, 2 when a verification check
/// fails. The environment variable SRK_TOLERANCE_SCALE multiplies the
/// verification thresholds (default 1).
int dispatch(std::vector<std::string> args, std::ostream& out,
             std::ostream& err);

}  // namespace srk_cli
