#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3fm {

// Runs one CLI invocation. Returns 0 on success, 1 on input validation
// failure, 2 on computation failure (budget exhausted, postcondition
// violated). The report document goes to out, diagnostics to err.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace k3fm
