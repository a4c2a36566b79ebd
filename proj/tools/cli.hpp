#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace egocount::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 I/O failure, 2 validation or precondition failure.
/// Errors are written to `err` as one JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace egocount::cli
