#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polysum {

/// Precondition violated (negative factorial argument, empty range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Division by zero in rational or polynomial arithmetic.
class ArithmeticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal self-check failed. Seeing one of these is a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed polynomial expression. offset() is the byte offset into the source.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : std::runtime_error("at offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Syntactically valid input using something the grammar does not lower
/// (negative or non-literal exponent, division by a non-literal).
class UnsupportedConstruct : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace polysum
