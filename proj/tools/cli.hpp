#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symprove::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,     // unreadable or malformed input, failed check
  exit_usage = 2,       // unknown subcommand or flag
  exit_not_reduced = 3, // prove found no proof; not a disproof
};

/// Runs one command line (args excludes the program name) and returns the
/// exit code. Normal output goes to `out`, diagnostics and usage to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symprove::cli
