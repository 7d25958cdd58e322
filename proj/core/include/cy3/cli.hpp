#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cy3 {

/// Run the cy3 command line.  Returns the process exit status:
/// 0 all checks passed, 1 at least one check failed, 2 usage error.
/// Reports go to `out`, usage errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cy3
