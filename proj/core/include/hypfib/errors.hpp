#pragma once

#include <stdexcept>
#include <string>

namespace hypfib {

// Base for every error raised by the library. Each subclass maps onto one
// named failure mode of the public API.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Binary operation on values from two different coefficient rings.
class RingMismatch : public Error {
public:
    using Error::Error;
};

// Surd extraction on a quadratic-extension value with a nonzero rational part.
class NonPureSurd : public Error {
public:
    using Error::Error;
};

// A numeric-only kernel was handed the symbolic-k ring.
class SymbolicKUnsupported : public Error {
public:
    using Error::Error;
};

// Symbolic parameter grid exceeds the polynomial degree cap.
class GridTooLarge : public Error {
public:
    using Error::Error;
};

class InvalidRange : public Error {
public:
    using Error::Error;
};

class MalformedReport : public Error {
public:
    using Error::Error;
};

// Text that does not follow the polynomial / rational grammar.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace hypfib
