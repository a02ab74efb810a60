#pragma once

#include <string>
#include <vector>

namespace ifsx::cli {

// Full command-line entry point: parses arguments, runs the command, writes
// the report to --out or stdout.  Returns the process exit code:
//   0  certified outcome
//   2  provisional / undecided / incomparable / inputs-incompatible
//   1  errors (parse, validation, budget), message on stderr
int run(int argc, const char* const* argv);

// Test-friendly overload; `args` excludes the program name.
int run(const std::vector<std::string>& args);

} // namespace ifsx::cli
