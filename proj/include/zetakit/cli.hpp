#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetakit::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kUnsupportedValue = 3,
};

/// Runs one zetakit invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetakit::cli
