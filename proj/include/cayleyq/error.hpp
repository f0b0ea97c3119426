#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cayleyq {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised by exact elimination; `column` is the 0-based column with no pivot.
struct SingularMatrix : std::domain_error {
    explicit SingularMatrix(std::size_t col)
        : std::domain_error("singular matrix: no pivot in column " + std::to_string(col)),
          column(col) {}
    std::size_t column;
};

// I + A is singular, i.e. -1 is an eigenvalue of A.
struct CayleyObstruction : std::domain_error {
    CayleyObstruction()
        : std::domain_error("Cayley map undefined: -1 is an eigenvalue obstruction (I + A is singular)") {}
};

struct NotAnIsometry : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t at)
        : std::invalid_argument(what + " at byte " + std::to_string(at)), offset(at) {}
    std::size_t offset;
};

struct SizeLimitExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace cayleyq
