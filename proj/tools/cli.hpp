#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shtk::cli {

/// Runs one request; args excludes the program name. Returns the exit code
/// (0 success, 2 parse or domain error, 1 internal error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shtk::cli
