#pragma once

#include <stdexcept>
#include <string>

namespace hqm {

/// Base of every error raised by the library. The CLI maps the concrete
/// subclasses onto exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Series truncation order out of range (e.g. N = 0).
class InvalidTruncation : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a primitive (w = 0 for divisor sums,
/// division by zero, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The Chern-character system has no integral solution for the chosen
/// normalization class.
class UnsolvableNormalization : public Error {
public:
    using Error::Error;
};

/// A Quot-scheme class with negative dimension or otherwise ill-formed.
class InvalidComponent : public Error {
public:
    using Error::Error;
};

/// Query rejected during validation.
class InvalidQuery : public Error {
public:
    using Error::Error;
};

/// The request is outside what is proven (strict mode) and no conjectural
/// fallback was requested.
class UnsupportedCase : public Error {
public:
    using Error::Error;
};

/// Two independent routes produced different values.
class RouteDisagreement : public Error {
public:
    using Error::Error;
};

} // namespace hqm
