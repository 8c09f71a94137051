#pragma once

// Command-line front end: eval, endpoint, witness, table, trace, verify.
// Exit codes: 0 success, 1 verification failed, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace meanbounds {

/// General-format rendering with 15 significant digits and '.' as
/// the decimal separator regardless of locale. Infinities print as inf/-inf.
std::string format_real(double value);

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace meanbounds
