#pragma once

#include <stdexcept>
#include <string>

namespace orbit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shapes do not match (non-square input, mismatched truncation, ...).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A result would overflow or contains non-finite entries.
class NumericRangeError : public Error {
public:
    using Error::Error;
};

/// An argument violates a mathematical precondition (membership, invertibility, gamma = 0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An eigenvalue falls outside the domain of a spectral function.
class SpectrumDomainError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Two routes to the same quantity disagree, or a certified bound was violated.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Malformed JSON document.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace orbit
