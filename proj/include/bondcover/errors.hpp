#pragma once

#include <stdexcept>
#include <string>

namespace bondc {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition or input constraint was violated.
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// An exact search exceeded its configured node budget.  The search never
// returns a wrong answer; it raises this instead.
struct BudgetError : Error {
    explicit BudgetError(const std::string& what) : Error(what) {}
};

// Instance text could not be parsed; carries 1-based line/column.
struct ParseError : Error {
    ParseError(const std::string& what, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    int line;
    int column;
};

}  // namespace bondc
