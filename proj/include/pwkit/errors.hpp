#pragma once

#include <stdexcept>
#include <string>

namespace pwkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PWKIT_DEFINE_ERROR(Name)              \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(std::string(#Name ": ") + what) {} \
  }

PWKIT_DEFINE_ERROR(InvalidGrid);
PWKIT_DEFINE_ERROR(InvalidArgument);
PWKIT_DEFINE_ERROR(BallOutsideGrid);
PWKIT_DEFINE_ERROR(UnsupportedDimension);
PWKIT_DEFINE_ERROR(DirectionsNotAntipodal);
PWKIT_DEFINE_ERROR(QuadratureNotExact);
PWKIT_DEFINE_ERROR(NotEven);
PWKIT_DEFINE_ERROR(ZeroFunction);
PWKIT_DEFINE_ERROR(ZeroInput);
PWKIT_DEFINE_ERROR(UnsupportedPair);
PWKIT_DEFINE_ERROR(DegenerateCalibration);
PWKIT_DEFINE_ERROR(GroupTooLarge);
PWKIT_DEFINE_ERROR(DegreeTooLarge);
PWKIT_DEFINE_ERROR(NotInvariant);
PWKIT_DEFINE_ERROR(NoSolutionAtDegree);
PWKIT_DEFINE_ERROR(ObstructionHit);
PWKIT_DEFINE_ERROR(ParseError);
PWKIT_DEFINE_ERROR(ConfigError);

#undef PWKIT_DEFINE_ERROR

}  // namespace pwkit
