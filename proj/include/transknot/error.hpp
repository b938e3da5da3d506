#pragma once

#include <stdexcept>
#include <string>

namespace transknot {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TRANSKNOT_DEFINE_ERROR(name)      \
  class name : public Error {             \
   public:                                \
    using Error::Error;                   \
  };

TRANSKNOT_DEFINE_ERROR(DegenerateCone)
TRANSKNOT_DEFINE_ERROR(ReversalError)
TRANSKNOT_DEFINE_ERROR(ParseError)
TRANSKNOT_DEFINE_ERROR(InvalidDiagram)
TRANSKNOT_DEFINE_ERROR(HostTooShort)
TRANSKNOT_DEFINE_ERROR(InadmissibleDoublePoint)
TRANSKNOT_DEFINE_ERROR(FamilyArityError)
TRANSKNOT_DEFINE_ERROR(ComponentMismatch)
TRANSKNOT_DEFINE_ERROR(PreconditionFailed)
TRANSKNOT_DEFINE_ERROR(OracleFailure)

#undef TRANSKNOT_DEFINE_ERROR

}  // namespace transknot
