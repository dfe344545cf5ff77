#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treeirr::cli {

/// Runs the command line given as argv-style tokens (without the program
/// name), reading `in` and writing `out`/`err`.
/// Exit codes: 0 success, 1 usage error, 2 I/O or format error,
/// 3 counterexample found under check-claims --fail-on-counterexample.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace treeirr::cli
