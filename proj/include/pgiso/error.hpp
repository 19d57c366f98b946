#pragma once

#include <stdexcept>
#include <string>

namespace pgiso {

/// Raised when an input violates a geometric or algebraic precondition.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the design-file reader for malformed text.
class FormatError : public Error {
public:
    FormatError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace pgiso
