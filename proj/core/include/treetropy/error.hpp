#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace treetropy {

enum class ErrorKind {
  // pattern validation
  EmptyComponent,
  SingletonComponent,
  OverlapTooLarge,
  NotConnected,
  Cyclic,
  NonMaximal,
  OutOfRange,
  // path entropy
  NonConvergence,
  NotAdjacent,
  // collapse / explosion
  CollapseInvalid,
  PolicyMismatch,
  VerificationFailed,
  // star theory
  BadRange,
  NotRepresentable,
  PivotNotFound,
  // enumeration
  CapExceeded,
  // text / json input
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so that
// callers (and the CLI exit-code logic) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace treetropy
