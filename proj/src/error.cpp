#include "hopfsuper/error.hpp"

namespace hopfsuper {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::IncompatibleConductor: return "IncompatibleConductor";
    case ErrorKind::FuelExhausted: return "FuelExhausted";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownScalar: return "UnknownScalar";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::BasisNotClosed: return "BasisNotClosed";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NotGrouplike: return "NotGrouplike";
    case ErrorKind::Incomplete: return "Incomplete";
    case ErrorKind::IncompleteCharacters: return "IncompleteCharacters";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::SuperCriteriaFailure: return "SuperCriteriaFailure";
    case ErrorKind::NotInvolutiveGrouplike: return "NotInvolutiveGrouplike";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::ExtensionFailure: return "ExtensionFailure";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {
std::string decorate(ErrorKind kind, const std::string& msg, int line, int column) {
  std::string out = kind_name(kind);
  if (line > 0) out += " at line " + std::to_string(line) + ", column " + std::to_string(column);
  return out + ": " + msg;
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& msg, int line, int column)
    : std::runtime_error(decorate(kind, msg, line, column)), kind_(kind), line_(line), column_(column) {}

}  // namespace hopfsuper
