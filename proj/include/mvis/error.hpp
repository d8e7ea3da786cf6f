#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mvis {

enum class ErrorCode {
  disconnected_graph,
  invalid_vertex_id,
  empty_set,
  too_small,
  incomplete_cover,
  bad_params,
  not_independent,
  out_of_range,
  no_witness_known,
  unsupported_family,
  bad_spec,
  io_error,
  incomplete,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::disconnected_graph: return "DisconnectedGraph";
    case ErrorCode::invalid_vertex_id: return "InvalidVertexId";
    case ErrorCode::empty_set: return "EmptySet";
    case ErrorCode::too_small: return "TooSmall";
    case ErrorCode::incomplete_cover: return "IncompleteCover";
    case ErrorCode::bad_params: return "BadParams";
    case ErrorCode::not_independent: return "NotIndependent";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::no_witness_known: return "NoWitnessKnown";
    case ErrorCode::unsupported_family: return "UnsupportedFamily";
    case ErrorCode::bad_spec: return "BadSpec";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::incomplete: return "Incomplete";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mvis
