#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace findex {

enum class ErrorKind {
  self_loop,
  duplicate_edge,
  index_out_of_range,
  invalid_family_params,
  invalid_exponent,
  empty_graph,
  not_connected,
  product_too_large,
  limit_exceeded,
  retries_exhausted,
  missing_header,
  malformed_line,
};

std::string_view to_string(ErrorKind kind);

// Every recoverable failure of the library is reported as an Error carrying
// its kind. `position` is the offending edge's input position for graph
// construction errors, or the 1-based line number once the edge-list parser
// has annotated it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace findex
