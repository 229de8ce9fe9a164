#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steiner {

// Parses and executes one command-line invocation; args excludes the
// program name. Normal output goes to out; diagnostics go to err prefixed
// with a machine-readable code (DEGENERATE, USAGE, ...). Returns the
// process exit code: 0 success, 1 usage or domain error, 2 verification
// failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace steiner
