#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rkl::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInvalidInput = 2,
};

/// Runs one subcommand. `args` excludes the program name. Data goes to `out`
/// (or the file named by -o), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rkl::cli
