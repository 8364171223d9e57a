#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace swforge {

enum class ErrorKind {
  LoopEdge,
  IndexOutOfRange,
  MalformedGraph6,
  MalformedEdgeList,
  TooLarge,
  Disconnected,
  EmptyTerminals,
  BadK,
  BadSpec,
  Overflow,
  InfeasibleWidth,
  NotPrime,
  TooLargeModulus,
  IncompleteCoverage,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every module. The kind is stable and machine
/// readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace swforge
