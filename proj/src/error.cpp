#include "findex/error.hpp"

namespace findex {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::self_loop: return "SelfLoop";
    case ErrorKind::duplicate_edge: return "DuplicateEdge";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::invalid_family_params: return "InvalidFamilyParams";
    case ErrorKind::invalid_exponent: return "InvalidExponent";
    case ErrorKind::empty_graph: return "EmptyGraph";
    case ErrorKind::not_connected: return "NotConnected";
    case ErrorKind::product_too_large: return "ProductTooLarge";
    case ErrorKind::limit_exceeded: return "LimitExceeded";
    case ErrorKind::retries_exhausted: return "RetriesExhausted";
    case ErrorKind::missing_header: return "MissingHeader";
    case ErrorKind::malformed_line: return "MalformedLine";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(message), kind_(kind), position_(position) {}

}  // namespace findex
