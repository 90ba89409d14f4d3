#pragma once

#include <stdexcept>
#include <string>

namespace hbl {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HBL_DEFINE_ERROR(Name)             \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  };

// Morphisms whose domain/codomain do not line up for compose().
HBL_DEFINE_ERROR(DimensionMismatch)
// A structure map has the wrong shape for the structure it is declared as.
HBL_DEFINE_ERROR(ShapeMismatch)
// Scalars from incompatible fields were combined, or a value has no image in the field.
HBL_DEFINE_ERROR(FieldError)
HBL_DEFINE_ERROR(DivisionByZero)
HBL_DEFINE_ERROR(NoAntipode)
HBL_DEFINE_ERROR(AntipodeNotInvertible)
HBL_DEFINE_ERROR(NotInCCClass)
HBL_DEFINE_ERROR(PreconditionFailed)
HBL_DEFINE_ERROR(DistinctUnits)
HBL_DEFINE_ERROR(NotAGroup)
HBL_DEFINE_ERROR(OrderTooLarge)
HBL_DEFINE_ERROR(ParseError)
// Raised when a universally true statement fails on an instance: a bug, never a data problem.
HBL_DEFINE_ERROR(InternalInconsistency)

#undef HBL_DEFINE_ERROR

}  // namespace hbl
