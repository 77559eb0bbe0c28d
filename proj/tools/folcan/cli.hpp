#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace folcan::cli {

enum class Command { Intersect, Hilbert, Enumerate, Bounds, Example };
enum class OutputFormat { Json, Csv };

struct RunConfig {
  Command command = Command::Intersect;
  std::optional<std::string> input_path;
  OutputFormat output_format = OutputFormat::Json;
  unsigned worker_count = 1;
  std::optional<std::string> out_path;
};

/// Exit statuses: 0 success, 1 I/O or parse error, 2 validation failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitValidation = 2;

/// Runs one invocation. `args` excludes the program name. The requested
/// document goes to `out` (or --out), error objects
/// {"error": {code, message, context}} go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folcan::cli
