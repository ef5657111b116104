#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holo {

enum class ErrorKind {
  InvalidArgument,
  OverExtremal,
  NonPositiveMass,
  CoincidentPoints,
  NonConvergent,
  SectorUnsupported,
  DomainError,
  NoBracket,
  NoHorizon,
  BadBranch,
  NotPowerOfBranch,
  BlockOutOfRange,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` identifies the contract that
/// was violated; `what()` carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace holo
