#pragma once

#include <iosfwd>

namespace setconc::cli {

/// Runs the command line. Reports go to `out` (or the --output file); failures
/// go to `err` as a JSON object with an "error.code" field. Returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace setconc::cli
