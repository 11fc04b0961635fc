// Command-line front end entry point, separated from main() so tests can
// drive it in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cardcomp {

// Runs the CLI on the given arguments (program name excluded). Writes
// reports to `out` and diagnostics to `err`; returns the process exit code
// (0 = sat/yes/found/valid, 1 = unsat/no/none/invalid, 2 = input error,
// 3 = resource limit).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cardcomp
