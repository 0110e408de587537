#pragma once

#include <stdexcept>
#include <string>

namespace qloop {

enum class ErrorKind {
  InternalInconsistency,
  NotDivisible,
  TruncationOverflow,
  UnsupportedKind,
  InvalidParams,
  WrapInconsistency,
  NotGraded,
  InvalidRegime,
  UnknownId,
  ConfigError,
  ResourceError,
};

[[nodiscard]] const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// runner can map it to a report status or an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qloop
