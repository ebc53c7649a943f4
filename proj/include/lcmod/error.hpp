#pragma once

#include <stdexcept>
#include <string>

namespace lcmod {

enum class ErrorKind {
  RankMismatch,
  CoefficientOutOfRing,
  ZeroPolynomial,
  RankTooLarge,
  NotAUnit,
  PrecisionExhausted,
  NonMonic,
  NotSheer,
  NotContractive,
  NotApplicable,
  NotRepresentable,
  UnsupportedDescriptor,
  InconclusiveAtBound,
  FingerprintIncomparable,
  AmorphicProjectionUnsupported,
  ScalarDensityUnverified,
  ModelUnavailable,
  UnknownName,
  BadParams,
  ParseError,
  Internal,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::CoefficientOutOfRing: return "CoefficientOutOfRing";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NonMonic: return "NonMonic";
    case ErrorKind::NotSheer: return "NotSheer";
    case ErrorKind::NotContractive: return "NotContractive";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::UnsupportedDescriptor: return "UnsupportedDescriptor";
    case ErrorKind::InconclusiveAtBound: return "InconclusiveAtBound";
    case ErrorKind::FingerprintIncomparable: return "FingerprintIncomparable";
    case ErrorKind::AmorphicProjectionUnsupported: return "AmorphicProjectionUnsupported";
    case ErrorKind::ScalarDensityUnverified: return "ScalarDensityUnverified";
    case ErrorKind::ModelUnavailable: return "ModelUnavailable";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace lcmod
