#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace spath {

// Every domain failure carries one of these codes so callers (and tests)
// can dispatch without parsing messages.
enum class Errc {
  self_loop,
  duplicate_edge,
  bad_weight,
  missing_edge,
  unknown_vertex,
  invalid_path,
  source_equals_target,
  graph_too_large,
  bad_weight_range,
  syntax,
  invalid_argument,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::optional<int> line = std::nullopt)
      : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + message : message),
        code_(code),
        line_(line) {}

  Errc code() const noexcept { return code_; }

  // Input line the error was detected on, when it came from a graph file.
  std::optional<int> line() const noexcept { return line_; }

 private:
  Errc code_;
  std::optional<int> line_;
};

}  // namespace spath
