#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ultrafree {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search hit its node or wall-clock limit; no partial result is returned.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class NotKrFree : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

/// A structural claim that must hold for valid inputs failed on this run.
class ClaimViolation : public Error {
public:
    using Error::Error;
};

/// A proof step found no witness; the input was not what the caller promised.
class InternalContradiction : public Error {
public:
    using Error::Error;
};

class Infeasible : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    /// line == 0 when no position is known.
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(line == 0 ? what
                          : what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class SelfLoopRejected : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace ultrafree
