#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covpeb {

enum class ErrorKind {
  BadParams,
  InvalidEdge,
  NotConnected,
  MixedDirectedness,
  DimensionMismatch,
  InsufficientPebbles,
  NotAnEdge,
  ValueNotPresent,
  Overflow,
  BudgetExceeded,
  ProofViolation,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an outcome without parsing
/// messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace covpeb
