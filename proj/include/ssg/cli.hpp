#pragma once

#include <iosfwd>

namespace ssg {

// Process exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,         // parse or usage error, unreadable file
  kExitVerifyFailed = 2,  // a requested verification failed
  kExitInvariant = 3,     // internal invariant violation
};

/// Entry point of the `ssg` tool:
///
///   ssg gb <file> | --bench <family>:<n>[:p] | --seed <int>  [options]
///   ssg verify <system> <basis>
///   ssg generate --bench <family>:<n>[:p] | --seed <int>
///
/// Writes results to `out` and diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ssg
