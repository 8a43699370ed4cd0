#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bricklab {

enum class ErrorKind {
  ParseError,
  InvalidQuiver,
  NonAdmissibleRelation,
  RadicalBoundExceeded,
  ImproperIdeal,
  UnsupportedIdeal,
  AlgebraMismatch,
  InvalidRepresentation,
  ZeroModule,
  NotSubrepresentation,
  NotTauRigid,
  NotIndecomposable,
  InputIsBrick,
  SearchExhausted,
  MutationFailed,
  ZeroVector,
  TauRigidInput,
  NotASink,
  NotASource,
  UnknownExample,
  PostconditionViolated,
};

std::string_view kind_name(ErrorKind kind);

/// Every module error carries a machine-readable category.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bricklab
