#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mulli::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,
    kDomainError = 1,
    kUsageError = 2,
    kVerifyFailed = 3,
};

/// Default enumeration cap; MULLI_MAX_N overrides it.
inline constexpr int kDefaultMaxN = 30;

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mulli::cli
