#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Runs the command-line interface on the given arguments (without the program
// name), writing results to `out` and diagnostics to `err`.  Returns the
// process exit code: 0 on success, 1 on usage or runtime errors, 2 when a
// verification subcommand found a mismatch.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);
