#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wsrp::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kDataError = 2 };

/// Entry point shared by the wsrp executable and the tests. args excludes
/// the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wsrp::cli
