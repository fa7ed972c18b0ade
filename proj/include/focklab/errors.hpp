#pragma once

#include <stdexcept>
#include <string>

namespace focklab {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SectorViolation : std::domain_error {
    using std::domain_error::domain_error;
};

struct PreconditionViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace focklab
