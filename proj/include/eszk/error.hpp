#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eszk {

/// Base for every error raised by the library. The CLI maps the concrete
/// subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (coordinate bound, bad index subset, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// Syntax error while reading a polygon file. Line and column are 1-based.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : InputError(what + " (line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// The operation was called on an input outside its domain, e.g. the
/// determinant-sign test on a non-strict polygon.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The request is well-formed but exceeds what exhaustive methods can do
/// within the configured budget.
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// A bounded randomized procedure ran out of attempts.
class ExhaustionError : public Error {
public:
    ExhaustionError(const std::string& what, int attempts)
        : Error(what + " after " + std::to_string(attempts) + " attempts"), attempts_(attempts) {}

    int attempts() const noexcept { return attempts_; }

private:
    int attempts_;
};

}  // namespace eszk
