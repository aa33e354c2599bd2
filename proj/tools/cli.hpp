#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seedset::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,       // bad flags, unreadable or malformed input
    verification_failed = 2,
    invariant_violated = 3,
};

/// Runs the `seedset` front end. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seedset::cli
