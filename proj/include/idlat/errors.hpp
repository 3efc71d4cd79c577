#pragma once

#include <stdexcept>
#include <string>

namespace idlat {

// Base of every error thrown by the library. The CLI maps all of these to
// exit code 2 (input error).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad ring shape, non-canonical ideal,
// broken groupoid axioms, non-invariant unit set, invalid lasso, ...
class ValidationError : public Error {
public:
    using Error::Error;
};

// Document could not be parsed; the message carries the JSON location.
class ParseError : public Error {
public:
    using Error::Error;
};

// Enumeration or closure would exceed a configured size cap.
class BudgetError : public Error {
public:
    using Error::Error;
};

// A required hypothesis is not met, e.g. a graph without Condition (K) or a
// groupoid that is not strongly effective.
class HypothesisError : public Error {
public:
    using Error::Error;
};

// The operation requires a finite coefficient ring.
class NotEnumerableError : public Error {
public:
    using Error::Error;
};

} // namespace idlat
