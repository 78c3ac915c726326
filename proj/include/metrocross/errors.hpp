#pragma once

#include <stdexcept>

namespace metrocross {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define METROCROSS_ERROR_TYPE(Name) \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  }

METROCROSS_ERROR_TYPE(NonHermitianInput);
METROCROSS_ERROR_TYPE(NotPSD);
METROCROSS_ERROR_TYPE(ParamOutOfRange);
METROCROSS_ERROR_TYPE(DimensionMismatch);
METROCROSS_ERROR_TYPE(NotCPTP);
METROCROSS_ERROR_TYPE(OptimizerFailure);
METROCROSS_ERROR_TYPE(NoSignChange);
METROCROSS_ERROR_TYPE(UnknownChannelKind);
METROCROSS_ERROR_TYPE(SingularEigenvalue);
METROCROSS_ERROR_TYPE(BadLength);

#undef METROCROSS_ERROR_TYPE

}  // namespace metrocross
