#pragma once

#include <stdexcept>
#include <string>

namespace abcr {

// Base class for all numeric failures raised by this library. CLI maps
// these to exit code 3; configuration problems use std::invalid_argument
// and map to exit code 2.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPositiveDefinite : NumericError {
    using NumericError::NumericError;
};

struct DegenerateSample : NumericError {
    using NumericError::NumericError;
};

struct NoConvergence : NumericError {
    using NumericError::NumericError;
};

struct NonFiniteDerivative : NumericError {
    using NumericError::NumericError;
};

struct SingularV : NumericError {
    using NumericError::NumericError;
};

struct RankDeficientX : NumericError {
    using NumericError::NumericError;
};

struct SingularH : NumericError {
    using NumericError::NumericError;
};

struct NewtonFailure : NumericError {
    using NumericError::NumericError;
};

struct PriorUnsupported : NumericError {
    using NumericError::NumericError;
};

struct CalibrationFailed : NumericError {
    using NumericError::NumericError;
};

struct GridTooNarrow : NumericError {
    using NumericError::NumericError;
};

}  // namespace abcr
