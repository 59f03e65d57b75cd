#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tightlp {

// Base class of all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message)
        , line_(line)
        , column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// An operation was called outside its domain (e.g. completion of a program
// with classical negation).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A configured resource cap (model count, brute-force universe size) was hit.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

} // namespace tightlp
