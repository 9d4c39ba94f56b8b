#ifndef ROWCONVEX_ERROR_HPP
#define ROWCONVEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rowconvex {

enum class ErrorCode {
  EmptyRow,
  EmptyShape,
  InvalidShape,
  LengthMismatch,
  UnsortedColumnSegment,
  BadFlag,
  MissingPlace,
  ZeroPolynomial,
  NotRowStandard,
  BadSpec,
  NonUnitPivot,
  OracleMismatch,
  AlreadyStraight,
  NotInModule,
  CertificateFailure,
  ShapeMismatch,
  NotHomogeneous,
  KindMismatch,
  IdentityFailure,
  UnknownLetter,
  ParseError,
};

inline const char* error_code_name(ErrorCode c)
{
  switch (c) {
    case ErrorCode::EmptyRow: return "EmptyRow";
    case ErrorCode::EmptyShape: return "EmptyShape";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::UnsortedColumnSegment: return "UnsortedColumnSegment";
    case ErrorCode::BadFlag: return "BadFlag";
    case ErrorCode::MissingPlace: return "MissingPlace";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotRowStandard: return "NotRowStandard";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::NonUnitPivot: return "NonUnitPivot";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::AlreadyStraight: return "AlreadyStraight";
    case ErrorCode::NotInModule: return "NotInModule";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::IdentityFailure: return "IdentityFailure";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// Every library failure is reported through this type. The witness is a
// short human-readable description of the offending object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {})
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code), message_(message), witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }
  const std::string& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::string witness_;
};

} // namespace rowconvex

#endif // ROWCONVEX_ERROR_HPP
