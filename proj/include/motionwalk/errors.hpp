#pragma once

#include <stdexcept>
#include <string>

namespace motionwalk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MOTIONWALK_DEFINE_ERROR(Name)         \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

// group_core
MOTIONWALK_DEFINE_ERROR(NotAGroupTable);
MOTIONWALK_DEFINE_ERROR(NotAHomomorphism);
MOTIONWALK_DEFINE_ERROR(NotInvertible);

// measures
MOTIONWALK_DEFINE_ERROR(GroupMismatch);
MOTIONWALK_DEFINE_ERROR(ContainsZeroCharacter);
MOTIONWALK_DEFINE_ERROR(NotOrbitClosed);
MOTIONWALK_DEFINE_ERROR(NotProbability);
MOTIONWALK_DEFINE_ERROR(EmptySupport);

// spectral
MOTIONWALK_DEFINE_ERROR(NoConvergence);
MOTIONWALK_DEFINE_ERROR(Overflow);

// rosenblatt
MOTIONWALK_DEFINE_ERROR(BudgetExceeded);

// io
MOTIONWALK_DEFINE_ERROR(ParseError);

#undef MOTIONWALK_DEFINE_ERROR

}  // namespace motionwalk
