#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperlab {

enum class ErrorKind {
  InvalidInput,
  EmptyMember,
  UnknownLabel,
  TooLarge,
  NotGenerating,
  NotNatural,
  NotCovering,
  PreconditionViolated,
  HypothesisFailed,
  TargetNotCL,
  SubbaseMissingX,
  EmptySubspace,
  NotContinuous,
  NotConnected,
  BudgetExceeded,
  UnknownProperty,
  EngineBug,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::EmptyMember: return "EmptyMember";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::NotNatural: return "NotNatural";
    case ErrorKind::NotCovering: return "NotCovering";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::TargetNotCL: return "TargetNotCL";
    case ErrorKind::SubbaseMissingX: return "SubbaseMissingX";
    case ErrorKind::EmptySubspace: return "EmptySubspace";
    case ErrorKind::NotContinuous: return "NotContinuous";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnknownProperty: return "UnknownProperty";
    case ErrorKind::EngineBug: return "EngineBug";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI's exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hyperlab
