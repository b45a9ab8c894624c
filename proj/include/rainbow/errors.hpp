#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Base of every exception thrown by the library. Each subclass corresponds to
// one failure kind so callers (and the CLI) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RAINBOW_DEFINE_ERROR(Name)        \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

RAINBOW_DEFINE_ERROR(CycleDetected);
RAINBOW_DEFINE_ERROR(EmptyPoset);
RAINBOW_DEFINE_ERROR(NotTreePoset);
RAINBOW_DEFINE_ERROR(NotSaturated);
RAINBOW_DEFINE_ERROR(Disconnected);
RAINBOW_DEFINE_ERROR(BadParams);
RAINBOW_DEFINE_ERROR(BadRange);
RAINBOW_DEFINE_ERROR(TooLarge);
RAINBOW_DEFINE_ERROR(NotConvex);
RAINBOW_DEFINE_ERROR(PreconditionViolated);
RAINBOW_DEFINE_ERROR(BadPivot);
RAINBOW_DEFINE_ERROR(RangeViolation);
RAINBOW_DEFINE_ERROR(Infeasible);
RAINBOW_DEFINE_ERROR(ParseError);

#undef RAINBOW_DEFINE_ERROR

}  // namespace rainbow
