#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace groupdist {

/// Runs the command line tool on `args` (without the program name) and
/// returns its exit status: 0 success, 2 usage or parse error, 3 validation
/// error, 4 runtime error. Errors are reported on `err` as one line
/// "error: <Kind>: <message>".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace groupdist
