#pragma once

#include <stdexcept>
#include <string>

namespace ifsx {

// Thrown when an operation would exceed its node / element budget.
// Callers that want a graceful "undecided" outcome catch this; the CLI maps
// it to exit code 1 when it escapes.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Document parsing failure with a human-readable location.
struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& what, int line_, int column_)
        : std::runtime_error(what), line(line_), column(column_) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ifsx
