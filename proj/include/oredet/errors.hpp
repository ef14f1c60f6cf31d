#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oredet {

// Arithmetic errors (division by zero polynomial / rational function / operator).
class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A mathematical precondition of an operation does not hold (singular matrix
// where a nonzero determinant is required, dd != 1 for the reduction, ...).
// The CLI maps these to exit code 2.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDeterminant : public PreconditionError {
public:
    ZeroDeterminant() : PreconditionError("matrix has zero Dieudonne determinant") {}
    explicit ZeroDeterminant(const std::string& what) : PreconditionError(what) {}
};

class NoKernel : public PreconditionError {
public:
    NoKernel() : PreconditionError("leading matrix is nonsingular: no row relation exists") {}
};

// Malformed user input (expression syntax, JSON shape, file access). Exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t column)
        : InputError("column " + std::to_string(column) + ": " + message),
          column_(column) {}

    // 1-based column of the offending character.
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

// An independently recomputed quantity disagrees with the pipeline. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace oredet
