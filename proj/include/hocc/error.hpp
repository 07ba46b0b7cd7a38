#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hocc {

// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class EmptyGraphError : public Error {
public:
    using Error::Error;
};

// Bad parameters: order cap exceeded, 2k >= n, p outside [0,1], ...
class ConfigError : public Error {
public:
    using Error::Error;
};

// Clique enumeration refused because the work estimate exceeds the budget.
class BudgetError : public Error {
public:
    BudgetError(double estimate, double budget)
        : Error("estimated work " + std::to_string(estimate) + " exceeds budget " +
                std::to_string(budget)),
          estimate_(estimate) {}

    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

// A statistic has no defined value (no wedges, every sample failed, ...).
class UndefinedStatisticError : public Error {
public:
    using Error::Error;
};

}  // namespace hocc
