#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccover::cli {

/// Run the command-line tool. Exit codes are a stable contract:
/// 0 success (solve: certificate verified), 1 verification failure,
/// 2 input/schema error, 3 model violation, 4 oracle cap exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ccover::cli
