// errors.hpp: exception hierarchy shared by every tidisc module

#pragma once

#include <stdexcept>
#include <string>

namespace tidisc {

/// Base of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's preconditions.
/// The CLI maps this family to exit code 2.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A numerical kernel could not deliver its contract.
/// The CLI maps this family to exit code 3.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

class InvalidState : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotAState : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class DimensionMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Raised for out-of-range physical parameters (m, c, s, rates, schedules).
class InvalidParameter : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// m outside (0, 1) where a transition threshold is required.
class InvalidM : public InvalidParameter {
public:
    using InvalidParameter::InvalidParameter;
};

/// Initial correlation c outside its admissible range.
class InvalidC : public InvalidParameter {
public:
    using InvalidParameter::InvalidParameter;
};

class PoleEncountered : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

class QuadratureFailure : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

class IntegrationFailure : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

class LimitUnstable : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

class SingularOhmicity : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

} // namespace tidisc
