#pragma once

#include <stdexcept>
#include <string>

namespace crcs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed value: wrong length, color out of range, bad vertex id.
struct IllFormedInput : Error {
    using Error::Error;
};

// Well-formed input that violates an operation's precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// A class-specific solver was handed an instance outside its class.
struct WrongSolver : Error {
    using Error::Error;
};

struct NotACograph : WrongSolver {
    NotACograph() : WrongSolver("graph is not a cograph (contains an induced P4)") {}
};

struct NotSplit : WrongSolver {
    NotSplit() : WrongSolver("graph is not a split graph") {}
};

struct BudgetExhausted : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(int line, int column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line(line),
          column(column)
    {
    }
    int line;
    int column;
};

// Syntactically fine file describing a semantically invalid object
// (improper coloring, orientation violating in-weight constraints, ...).
struct ValidationError : Error {
    using Error::Error;
};

} // namespace crcs
