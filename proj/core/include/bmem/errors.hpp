#pragma once

#include <stdexcept>
#include <string>

namespace bmem {

// Base class for every error this library raises.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// A structural rule was violated: negative distance, nonzero diagonal,
// non-bipolar entry, out-of-range start neuron, ...
class ValidationError : public Error {
public:
    using Error::Error;
};

// Dimensions disagree, or a dimension cannot be inferred (empty memory set).
class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Malformed textual input. `line()` is 1-based, 0 when no line applies.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, std::size_t line = 0)
        : Error(message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

// A request exceeded a hard resource limit (e.g. exhaustive enumeration size).
class LimitError : public Error {
public:
    using Error::Error;
};

}  // namespace bmem
