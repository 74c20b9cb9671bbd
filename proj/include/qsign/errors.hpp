#pragma once

#include <stdexcept>
#include <string>

namespace qsign {

/// Raised when a series that must be inverted has a constant term other than +1 or -1.
class NonUnitConstantTerm : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a coefficient (or a range of coefficients) beyond the known precision is requested.
class BeyondPrecision : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Raised for parameters outside an operation's domain. `parameter()` names the offender.
class InvalidParameter : public std::invalid_argument {
public:
    InvalidParameter(std::string parameter, const std::string &what)
        : std::invalid_argument(parameter + ": " + what), parameter_(std::move(parameter))
    {
    }

    const std::string &parameter() const noexcept { return parameter_; }

private:
    std::string parameter_;
};

} // namespace qsign
