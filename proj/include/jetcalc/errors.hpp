#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetcalc {

// Bad user input: malformed text, mismatched fields, invalid parameters.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error in a text input; position is a 0-based character offset
// into the offending line (line is 0 when the input is a single line).
class ParseError : public DomainError {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : DomainError(msg + " (line " + std::to_string(line + 1) + ", column " +
                      std::to_string(column + 1) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A computation exceeded its configured step budget.  This is an explicit
// failure, never a silently truncated answer.
class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(std::size_t budget)
        : std::runtime_error("computation budget exhausted (" + std::to_string(budget) +
                             " steps)"),
          budget_(budget) {}

    std::size_t budget() const { return budget_; }

private:
    std::size_t budget_;
};

// A checked internal invariant failed.  Indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace jetcalc
