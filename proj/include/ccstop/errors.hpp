#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccstop {

// Error hierarchy. The CLI maps each class onto an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller broke a precondition (activating an active vertex, wrong view type, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

// Out-of-domain numeric parameter (n < k, alpha outside [0,1], unknown family ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Structural invariant violated by an input object.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Enumeration or table size above a hard cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Malformed text input; carries the 1-based line and the 0-based field index on that line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t field, const std::string& what)
        : Error("line " + std::to_string(line) + ", field " + std::to_string(field) + ": " + what),
          line_(line),
          field_(field) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t field() const noexcept { return field_; }

private:
    std::size_t line_;
    std::size_t field_;
};

}  // namespace ccstop
