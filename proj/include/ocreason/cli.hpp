#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ocreason {

/// Runs the `oc-reason` command line. `args` excludes the program name.
/// Exit codes: 0 success or "yes", 1 error, 2 empty correspondence derived,
/// 3 "no" (not an improvement, not closed, unsatisfiable, nothing found).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ocreason
