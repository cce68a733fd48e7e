#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Incompatible matrix or tensor dimensions.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Index or parameter outside its valid range.
class RangeError : public Error {
public:
    using Error::Error;
};

// Malformed archive bytes (bad magic, truncation, overlapping ranges, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

// Iterative solver failed to reach its tolerance within the iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Numerically invalid data (non-finite values, broken invariants in inputs).
class DataError : public Error {
public:
    using Error::Error;
};

// Caller misuse of an interface (empty inputs, missing prerequisites).
class UsageError : public Error {
public:
    using Error::Error;
};

// A runtime precondition that licenses an algebraic shortcut was violated.
class ContractError : public Error {
public:
    using Error::Error;
};

} // namespace lrc
