// Batch command-line driver: verification suites, exact operator application,
// and dimension tables, emitted as deterministic JSON/CSV/text reports.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bgg {

/// Runs the tool on the given arguments (argv[0] excluded) and streams the
/// report to `out` and diagnostics to `err`.  Returns the process exit code:
/// 0 every checked identity holds, 1 an identity failed (first counterexample
/// serialized in the report), 2 usage or shape error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bgg
