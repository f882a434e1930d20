#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metcomp::cli {

/// Dispatches one command line (without the program name). Exit codes:
/// 0 success, 1 verification failure, 2 input error. All diagnostics go to
/// err; reports go to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metcomp::cli
