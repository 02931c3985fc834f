#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crcs::cli {

enum ExitCode { kYes = 0, kNo = 1, kError = 2, kOverflow = 3 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace crcs::cli
