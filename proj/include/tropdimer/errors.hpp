#pragma once

#include <stdexcept>
#include <string>

namespace tropdimer {

// Input is well formed but violates a mathematical precondition.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input could not be parsed; line/column are 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line = 0, int column = 0)
        : std::runtime_error(msg), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace tropdimer
