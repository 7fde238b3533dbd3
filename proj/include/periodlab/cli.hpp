#pragma once

#include <iosfwd>

namespace periodlab::cli {

/// Full command-line entry point; the binary's main() is a one-liner around
/// this so tests can drive every subcommand in-process.
///
/// Exit codes: 0 = success (including "checked, conditions violated" --
/// reporting on input is not a failure), 1 = a sweep or verification found
/// genuine falsification evidence (violations, mismatches, stalls, a catalog
/// cache that fails re-verification), 2 = usage or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace periodlab::cli
