#ifndef RPS_ERROR_HPP
#define RPS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rps {

enum class ErrorKind {
  // instance validation
  BadPlayerCount,
  EmptySet,
  OutOfRange,
  DuplicateMember,
  NonPositiveWeight,
  Overflow,
  // coalitions and enumeration guards
  EmptyCoalition,
  TooLarge,
  // flow / core
  FlowNotMaximal,
  NotInCore,
  NegativeAuxCapacity,
  ReconstructionFailed,
  NotSingletonInstance,
  // game tables and the three-player embedding
  InvalidTable,
  NotThreePlayers,
  NotConvex,
  NonZeroSingletons,
  NegativeResidual,
  IntegralityRequired,
  // I/O
  ParseError,
};

const char* error_kind_name(ErrorKind kind);

/// Library-wide exception carrying a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace rps

#endif  // RPS_ERROR_HPP
