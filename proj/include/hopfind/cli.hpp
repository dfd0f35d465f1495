#ifndef HOPFIND_CLI_HPP
#define HOPFIND_CLI_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hopfind/report.hpp"

namespace hopfind {

/// Outcome of one command: checks with witnesses plus a ledger of
/// dimensions, rendered as JSON or text.
struct CommandReport {
  std::string task;
  /// "pass", "fail" or "unsupported" (a hypothesis of the construction fails).
  std::string status;
  Report checks;
  std::vector<std::pair<std::string, std::size_t>> dimensions;
  std::optional<double> millis;

  std::string json() const;
  std::string text() const;
};

/// Exit codes of runCommand.
enum ExitCode : int { kExitPass = 0, kExitMathFailure = 1, kExitInputError = 2 };

/// hopfind verify | induce --kind K | theorem --which W | catalog. args
/// excludes the program name. Reports go to out (or --output), input
/// errors to err.
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfind

#endif  // HOPFIND_CLI_HPP
