#pragma once

#include <stdexcept>
#include <string>

namespace albert {

// Base of every error raised by the library. Each subclass names one failure
// mode; callers that only care about "something went wrong" catch Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ALBERT_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

ALBERT_DEFINE_ERROR(InvalidArgument);
ALBERT_DEFINE_ERROR(DivisionByZero);
ALBERT_DEFINE_ERROR(FieldMismatch);
ALBERT_DEFINE_ERROR(ZeroInput);
ALBERT_DEFINE_ERROR(FactorizationBoundExceeded);
ALBERT_DEFINE_ERROR(AlgebraMismatch);
ALBERT_DEFINE_ERROR(NotEtale);
ALBERT_DEFINE_ERROR(NotCommutative);
ALBERT_DEFINE_ERROR(ModelMismatch);
ALBERT_DEFINE_ERROR(NotInvertible);
ALBERT_DEFINE_ERROR(ZeroLambda);
ALBERT_DEFINE_ERROR(SingularMap);
ALBERT_DEFINE_ERROR(DegenerateTrace);
ALBERT_DEFINE_ERROR(NotInComplement);
ALBERT_DEFINE_ERROR(NotIsotropic);
ALBERT_DEFINE_ERROR(SearchExhausted);
ALBERT_DEFINE_ERROR(BasisConstructionFailed);
ALBERT_DEFINE_ERROR(NotSplitModel);
ALBERT_DEFINE_ERROR(UnsupportedSubalgebra);
ALBERT_DEFINE_ERROR(ConfigError);

#undef ALBERT_DEFINE_ERROR

}  // namespace albert
