#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace sun::cli {

enum class Status { Ok, Error };

/// Outcome of one CLI invocation.  `payload` is what goes to stdout; for
/// `sample` it is an array whose elements are written one per line.
struct CommandResult {
  Status status = Status::Ok;
  nlohmann::json payload;
  double elapsed_ms = 0.0;
  int exit_code = 0;
  std::string code;     ///< machine-readable error code, empty when ok
  std::string message;  ///< error text, or help text for --help
  bool json_lines = false;
  bool help = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

/// Writes the result: payload to `out`, errors as a JSON object to `err`.
void emit(const CommandResult& result, std::ostream& out, std::ostream& err);

}  // namespace sun::cli
