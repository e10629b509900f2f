#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

enum class ErrorKind {
  EmptyIndex,
  NotAdmissible,
  LastPartTooSmall,
  MalformedWord,
  ParseError,
  TruncationError,
  ArgumentOutOfRange,
  CrossCheckFailure,
  UsageError,
  IoError,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI and the Python layer can map it to an exit code or exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mzv
