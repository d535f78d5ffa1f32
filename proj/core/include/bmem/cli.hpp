#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bmem {

// Exit code classes shared by every subcommand.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;       // bad flags / unknown subcommand
inline constexpr int kExitParse = 2;       // malformed input file
inline constexpr int kExitValidation = 3;  // structural or dimension violation
inline constexpr int kExitLimit = 4;       // enumeration limit refusal

// Runs one CLI invocation. `args` excludes the program name. Reports go to
// `out`, error messages to `err`; the return value is one of the exit codes
// above.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bmem
