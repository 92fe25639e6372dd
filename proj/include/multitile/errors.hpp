#pragma once

#include <stdexcept>
#include <string>

namespace multitile {

// Every failure raised by the library derives from Error, so callers (the
// CLI in particular) can separate library diagnostics from std exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MULTITILE_ERROR(Name)        \
  class Name : public Error {        \
   public:                           \
    using Error::Error;               \
  }

MULTITILE_ERROR(DescriptorError);
MULTITILE_ERROR(ArithmeticError);
MULTITILE_ERROR(PreconditionError);
MULTITILE_ERROR(IncommensurableError);
MULTITILE_ERROR(RationalityError);
MULTITILE_ERROR(ConstructionError);
MULTITILE_ERROR(SymmetryError);
MULTITILE_ERROR(BoundaryError);
MULTITILE_ERROR(WindowError);
MULTITILE_ERROR(AccountingError);
MULTITILE_ERROR(InternalConsistencyError);
MULTITILE_ERROR(ParseError);

#undef MULTITILE_ERROR

}  // namespace multitile
