#include "mvtensor/error.hpp"

namespace mvt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotInCarrier: return "NotInCarrier";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::EmbeddingFailure: return "EmbeddingFailure";
    case ErrorKind::LevelOverflow: return "LevelOverflow";
    case ErrorKind::ScalarUnsupported: return "ScalarUnsupported";
    case ErrorKind::NotUnitPreserving: return "NotUnitPreserving";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SignatureViolation: return "SignatureViolation";
    case ErrorKind::GridTooLarge: return "GridTooLarge";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::IOError: return "IOError";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace mvt
