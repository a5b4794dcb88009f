#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mvt {

enum class ErrorKind {
  DomainMismatch,
  CapExceeded,
  NotInCarrier,
  NotWellDefined,
  EmbeddingFailure,
  LevelOverflow,
  ScalarUnsupported,
  NotUnitPreserving,
  ParseError,
  SignatureViolation,
  GridTooLarge,
  SchemaError,
  UsageError,
  IOError,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

/// Typed failure raised by every operation in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mvt
