#pragma once

#include <iosfwd>

namespace hocc::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kInput = 2,
    kUndefined = 3,
    kBudget = 4,
};

// Entry point of the `hocc` tool. Summaries go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hocc::cli
