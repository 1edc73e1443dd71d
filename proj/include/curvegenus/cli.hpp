#ifndef CURVEGENUS_CLI_HPP
#define CURVEGENUS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace curvegenus::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailure = 1,
  kUsageError = 2,
  kInfeasible = 3,
  kInconclusive = 4,
};

/// Inclusive degree range parsed from "A..B".
struct DegreeRange {
  long first = 0;
  long last = 0;
};

/// Throws ParseError unless text is "A..B" with integers A <= B.
DegreeRange parse_degree_range(const std::string& text);

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Everything is written to `out` except diagnostics.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvegenus::cli

#endif  // CURVEGENUS_CLI_HPP
