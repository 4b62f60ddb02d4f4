#pragma once

#include <stdexcept>
#include <string>

namespace hopfmod {

// Error categories used across the library. Input/precondition problems throw
// Error with one of these codes; mathematical claim failures never throw, they
// surface as report entries.
enum class Errc {
  NonPrimeP,
  ReducibleModulus,
  InvalidN,
  DivisionByZero,
  FieldMismatch,
  AlgebraMismatch,
  NoPrimitiveRoot,
  NotAutomorphism,
  ValidationFailed,
  UnsupportedAlgebra,
  NotSmashCoproduct,
  NoActionData,
  MissingRadicalData,
  MissingIdempotentData,
  LiftFailed,
  ZeroPoint,
  InsufficientSteps,
  CyclotomicEnumerationUnsupported,
  UnsupportedBase,
  UnsupportedN,
  ParseError,
  VersionMismatch,
  DanglingReference,
  InternalError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrimeP: return "NonPrimeP";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::InvalidN: return "InvalidN";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::NoPrimitiveRoot: return "NoPrimitiveRoot";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::UnsupportedAlgebra: return "UnsupportedAlgebra";
    case Errc::NotSmashCoproduct: return "NotSmashCoproduct";
    case Errc::NoActionData: return "NoActionData";
    case Errc::MissingRadicalData: return "MissingRadicalData";
    case Errc::MissingIdempotentData: return "MissingIdempotentData";
    case Errc::LiftFailed: return "LiftFailed";
    case Errc::ZeroPoint: return "ZeroPoint";
    case Errc::InsufficientSteps: return "InsufficientSteps";
    case Errc::CyclotomicEnumerationUnsupported: return "CyclotomicEnumerationUnsupported";
    case Errc::UnsupportedBase: return "UnsupportedBase";
    case Errc::UnsupportedN: return "UnsupportedN";
    case Errc::ParseError: return "ParseError";
    case Errc::VersionMismatch: return "VersionMismatch";
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::InternalError: return "InternalError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace hopfmod
