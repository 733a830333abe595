// Command-line front end for hyperk3; main() is a thin wrapper around run().
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hk3::cli {

enum ExitCode { ok = 0, parse_error = 2, precondition = 3, none_found = 4 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hk3::cli
