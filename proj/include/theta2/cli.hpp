#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace theta2::cli {

/// Runs `theta2 <args...>`; args excludes the program name. Reports go to
/// out, diagnostics to err. Returns 0 on success (verdicts are data), 2 on
/// usage or parse errors, 1 on internal failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace theta2::cli
