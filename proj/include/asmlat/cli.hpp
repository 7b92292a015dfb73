#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asmlat::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDomainError = 2,
    kGuardExceeded = 3,
    kVerificationFailed = 4,
};

/// Runs one command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace asmlat::cli
