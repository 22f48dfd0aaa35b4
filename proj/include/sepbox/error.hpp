#pragma once

#include <stdexcept>
#include <string>

namespace sepbox {

enum class ErrorKind {
  InvalidInput,
  Parse,
  Disconnected,
  NotAGraph,
  HypothesisNotMet,
  NotAutomorphism,
  DegreeMismatch,
  InternalConsistency,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can tell precondition failures from bugs.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sepbox
