#pragma once

#include <stdexcept>
#include <string>

namespace dforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define DFORGE_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                      \
   public:                                                         \
    using Error::Error;                                            \
    const char* kind() const noexcept override { return #Name; }   \
  }

// group_core
DFORGE_DEFINE_ERROR(OrderBoundExceeded);
DFORGE_DEFINE_ERROR(NonInvertible);
DFORGE_DEFINE_ERROR(IdentityInSeed);
DFORGE_DEFINE_ERROR(NoRepresentation);

// calculus / cyclic_geom
DFORGE_DEFINE_ERROR(NotInS);
DFORGE_DEFINE_ERROR(InconsistentOrbit);
DFORGE_DEFINE_ERROR(BudgetExceeded);
DFORGE_DEFINE_ERROR(AxiomsNotVerified);

// exact_poly / dunkl
DFORGE_DEFINE_ERROR(DimensionMismatch);
DFORGE_DEFINE_ERROR(NotDivisible);
DFORGE_DEFINE_ERROR(FieldMismatch);

// forms_numeric
DFORGE_DEFINE_ERROR(SingularPoint);
DFORGE_DEFINE_ERROR(NotAReflection);
DFORGE_DEFINE_ERROR(SamplingExhausted);

// input handling
DFORGE_DEFINE_ERROR(ParseError);
DFORGE_DEFINE_ERROR(ValidationError);

#undef DFORGE_DEFINE_ERROR

}  // namespace dforge
