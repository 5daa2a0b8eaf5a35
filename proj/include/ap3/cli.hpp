#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ap3::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kBudget = 3,
};

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`; returns the exit code.
///
///   count     --n N --object {valid|Mn|Kn|Pn-ideals|Qn}
///   enumerate --n N --object {valid|Mn|Kn|KnL|KnR1|KnR2|Un} [--format text|json]
///   verify    --n-max N [--budget SECS] [--format text|json]
///   hasse     --n N --poset {Pn|Phin|Qn|Mn|Kn|Un} [--format dot|json]
///   realize   --n N --triples "i,j,k;..."
///
/// Global flags: --jobs J (worker threads), --force (ignore the item budget).
/// AP3_BUDGET_SECS sets the verify deadline when --budget is absent.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ap3::cli
