#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ga {

/// Domain error: undeclared index, signature mismatch, violated precondition.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Expression syntax error. Column is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t column, const std::string& what)
        : Error("column " + std::to_string(column) + ": " + what), column_(column) {}

    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

} // namespace ga
