#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csp::cli {

/// Runs the command line and returns the process exit code: 0 on success,
/// 1 on a user error, 2 when an internal invariant fails.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace csp::cli
