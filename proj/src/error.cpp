#include "swforge/error.hpp"

namespace swforge {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::MalformedEdgeList: return "MalformedEdgeList";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::EmptyTerminals: return "EmptyTerminals";
    case ErrorKind::BadK: return "BadK";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InfeasibleWidth: return "InfeasibleWidth";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLargeModulus: return "TooLargeModulus";
    case ErrorKind::IncompleteCoverage: return "IncompleteCoverage";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace swforge
