#pragma once

#include <stdexcept>
#include <string>

namespace swdual {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Raised when a rational function cannot be evaluated at the requested
// point (q = 0, or a denominator vanishing at t).
struct BadSpecialization : Error {
    using Error::Error;
};

struct ResourceLimit : Error {
    using Error::Error;
};

} // namespace swdual
