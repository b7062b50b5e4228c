#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobcode {

// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed ring spec, element notation or code file. `position` is a
// 0-based character offset into the offending line, `line` is 1-based
// (0 when the input was not line oriented).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position, std::size_t line = 0);

    std::size_t position() const { return position_; }
    std::size_t line() const { return line_; }
    /// Message without the location suffix.
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t position_;
    std::size_t line_;
};

// Structurally invalid construction request (non-prime p, reducible
// polynomial, m < 2, empty product, ...).
class SpecError : public Error {
public:
    using Error::Error;
};

// A ring order or enumeration size exceeds the configured cap.
class CapError : public Error {
public:
    using Error::Error;
};

// The structural character failed additivity or the generating property.
class CharacterError : public Error {
public:
    using Error::Error;
};

// Invalid code input, e.g. an all-zero column.
class CodeError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// An exact identity that must hold for valid inputs did not. Always a bug
// or a corrupted input table.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace frobcode
