#include "rps/error.hpp"

namespace rps {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadPlayerCount: return "BadPlayerCount";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DuplicateMember: return "DuplicateMember";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::EmptyCoalition: return "EmptyCoalition";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::FlowNotMaximal: return "FlowNotMaximal";
    case ErrorKind::NotInCore: return "NotInCore";
    case ErrorKind::NegativeAuxCapacity: return "NegativeAuxCapacity";
    case ErrorKind::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorKind::NotSingletonInstance: return "NotSingletonInstance";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::NotThreePlayers: return "NotThreePlayers";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::NonZeroSingletons: return "NonZeroSingletons";
    case ErrorKind::NegativeResidual: return "NegativeResidual";
    case ErrorKind::IntegralityRequired: return "IntegralityRequired";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace rps
