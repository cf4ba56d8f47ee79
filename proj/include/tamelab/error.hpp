#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tamelab {

enum class ErrorKind {
  InvalidArgument,
  OutOfRange,
  NotSymplectic,
  NotQuasiUnipotent,
  MonodromyBlockTooLarge,
  WildRamification,
  ResidueCharacteristic,
  NotPotentiallyGood,
  HypothesisNotMet,
  DegreeObstruction,
  PreconditionExcluded,
  NonCyclotomicFactor,
  EnumerationCap,
  SingularModN,
  NotAlternating,
  DegeneratePairing,
  UnknownSuite,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::NotQuasiUnipotent: return "NotQuasiUnipotent";
    case ErrorKind::MonodromyBlockTooLarge: return "MonodromyBlockTooLarge";
    case ErrorKind::WildRamification: return "WildRamification";
    case ErrorKind::ResidueCharacteristic: return "ResidueCharacteristic";
    case ErrorKind::NotPotentiallyGood: return "NotPotentiallyGood";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::DegreeObstruction: return "DegreeObstruction";
    case ErrorKind::PreconditionExcluded: return "PreconditionExcluded";
    case ErrorKind::NonCyclotomicFactor: return "NonCyclotomicFactor";
    case ErrorKind::EnumerationCap: return "EnumerationCap";
    case ErrorKind::SingularModN: return "SingularModN";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::DegeneratePairing: return "DegeneratePairing";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (and the
/// CLI) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tamelab
