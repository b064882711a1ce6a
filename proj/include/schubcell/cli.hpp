#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubcell {

enum class InputMode { Equations, Span };
enum class OutputFormat { Human, Json, Dot };

struct RunConfig {
  /// Matrix file; "-" reads standard input.
  std::string input = "-";
  /// Equations: rows cut V out. Span: rows span V.
  InputMode mode = InputMode::Equations;
  /// e.g. {"cells", "tnn"} or {"verify"}.
  std::vector<std::string> command;
  /// Lifts the ground set size limit up to the encoding maximum.
  bool allow_large = false;
  OutputFormat format = OutputFormat::Human;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command and returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// The list of accepted commands, for help text.
std::vector<std::string> command_names();

}  // namespace schubcell
