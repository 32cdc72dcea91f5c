#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csp {

/// Base for every error raised by the library. User-facing failures
/// (ill-typed values, interface mismatches, syntax errors) derive from it.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value or span does not fit the space it is applied to.
class TypeError : public Error {
public:
    using Error::Error;
};

/// Two systems (or matrices) cannot be composed because their interfaces differ.
class InterfaceError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A brute-force search was asked to handle an instance above its guard.
class SizeError : public Error {
public:
    using Error::Error;
};

/// The deterministic run policy found more than one enabled transition.
class NondeterminismError : public Error {
public:
    using Error::Error;
};

/// A library invariant was violated. Indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace csp
