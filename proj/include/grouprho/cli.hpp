#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grouprho::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2, precondition = 3 };

// Runs the command line (args excludes the program name). JSON or text goes
// to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grouprho::cli
