#pragma once

#include <stdexcept>
#include <string>

namespace arthur {

/// Malformed or inconsistent input. The CLI maps this to exit code 1.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Never expected on valid input;
/// the CLI maps this to exit code 2.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace arthur
