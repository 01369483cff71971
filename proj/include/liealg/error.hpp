#ifndef LIEALG_ERROR_HPP
#define LIEALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace liealg {

enum class ErrorKind {
  DimensionMismatch,
  NonSplitSpectrum,
  NotInvariant,
  EmptySubspace,
  NoCommonEigenvector,
  NotSolvable,
  NotClosed,
  Singular,
  AlgebraMismatch,
  NormalizerPreconditionFailed,
  SetupInvalid,
  InvalidInstance,
  TheoremViolation,
  Parse,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonSplitSpectrum: return "NonSplitSpectrum";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::EmptySubspace: return "EmptySubspace";
    case ErrorKind::NoCommonEigenvector: return "NoCommonEigenvector";
    case ErrorKind::NotSolvable: return "NotSolvable";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NormalizerPreconditionFailed: return "NormalizerPreconditionFailed";
    case ErrorKind::SetupInvalid: return "SetupInvalid";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers can map it
/// onto exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace liealg

#endif
