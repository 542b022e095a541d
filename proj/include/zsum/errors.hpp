#pragma once

#include <stdexcept>
#include <string>

namespace zsum {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// r does not divide k in zero-sum mode.
class DivisibilityError : public Error {
public:
    using Error::Error;
};

/// A parameter lies outside its admissible range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Malformed coloring text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A color value is not below the palette size.
class ColorRangeError : public Error {
public:
    using Error::Error;
};

/// An argument violates an operation's precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An enumeration guard tripped.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

/// A table would exceed the configured memory budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace zsum
