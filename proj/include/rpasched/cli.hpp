#ifndef RPASCHED_CLI_HPP
#define RPASCHED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rpasched {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;        // feasible / yes / all passed
inline constexpr int kExitNegative = 1;  // infeasible / no / some seed failed
inline constexpr int kExitError = 2;

/// Runs one command line (without the program name). Machine output goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpasched

#endif
