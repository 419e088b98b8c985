#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsgp::cli {

/// Runs the nsgp command line on `args` (natural order, no program name),
/// writing results to `out` and diagnostics to `err`.  Returns the process
/// exit code: 0 success, 1 domain error, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace nsgp::cli
