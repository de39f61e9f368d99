#pragma once

#include <stdexcept>
#include <string>

namespace artin3 {

// Error taxonomy shared by the whole library. The C API maps these 1:1 to
// status codes, so additions must be mirrored in include/artin3/artin3.h.
enum class Err {
  Internal = 1,
  InvalidArgument,
  GroupTooLarge,
  UnsupportedGroup,
  GroupMismatch,
  ParentMismatch,
  NotRealValued,
  NotOrthogonal,
  PreconditionFailed,
  NonCyclicInertia,
  UnresolvableInertia,
  NonIntegerResult,
  SupportOverlap,
  InvalidSupport,
  NotQuadraticConductor,
  UnsupportedDegree,
  IrreducibilityFailure,
  IndexDivisor,
  IsSquare,
  ReducibleResultant,
  ZeroElement,
  BoundTooLarge,
  BoxTooSmall,
  CoverageGap,
  SchemaError,
  DiscMismatch,
  IoError,
};

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

inline void check(bool cond, Err code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace artin3
