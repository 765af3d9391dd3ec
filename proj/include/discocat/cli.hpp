#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace discocat::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kDomainFailure = 1, // no parse, unknown word, failed check, unreadable input
    kUsage = 2,         // bad flags, malformed type expressions, bad config
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace discocat::cli
