#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sicck::cli {

/// Runs one command line (without the program name). Data goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on a data error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sicck::cli
