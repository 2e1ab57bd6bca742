#pragma once

#include <stdexcept>
#include <string>

namespace abcone {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on a parameter was violated. The message names the
/// inequality and the offending value.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Finite extension requested on a channel with |j| = 0.
class DegenerateChannelError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Numerical failure: a pole, a failed bracket, non-convergence.
class NumericalError : public Error {
public:
    using Error::Error;
};

class PoleError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class BracketError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class IllConditionedError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Reading a config file or writing output failed.
class IoError : public Error {
public:
    using Error::Error;
};

namespace detail {

std::string format_value(double v);

[[noreturn]] void throw_domain(const std::string& what, double value);

}  // namespace detail

}  // namespace abcone
