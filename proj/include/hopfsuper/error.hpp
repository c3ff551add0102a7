#pragma once

#include <stdexcept>
#include <string>

namespace hopfsuper {

enum class ErrorKind {
  DivisionByZero,
  IncompatibleConductor,
  FuelExhausted,
  SyntaxError,
  UnknownScalar,
  UnknownGenerator,
  ParityMismatch,
  BasisNotClosed,
  AxiomFailure,
  UnknownName,
  BadParams,
  NotGrouplike,
  Incomplete,
  IncompleteCharacters,
  NotClosed,
  VerificationFailure,
  SuperCriteriaFailure,
  NotInvolutiveGrouplike,
  NotAutomorphism,
  ExtensionFailure,
  IoError,
};

const char* kind_name(ErrorKind k);

// Every failure in the library surfaces as this exception. line/column are
// set only for errors that point into DSL source text (1-based, 0 = unset).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg, int line = 0, int column = 0);

  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorKind kind_;
  int line_;
  int column_;
};

}  // namespace hopfsuper
