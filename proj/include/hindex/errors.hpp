#pragma once

// Error hierarchy shared by every module. The CLI maps each family onto a
// distinct exit code (see tools/hindex_cli.cpp).

#include <stdexcept>
#include <string>

namespace hindex {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file: message names the line and/or field.
struct ParseError : Error {
    using Error::Error;
};

// Well-formed input that violates a record invariant.
struct ValidationError : Error {
    using Error::Error;
};

// Operation needs event-level data (or an owner name) the record lacks.
struct FidelityError : Error {
    using Error::Error;
};

// Argument outside the mathematical domain of a formula.
struct DomainError : Error {
    using Error::Error;
};

// Quantity undefined for the given input, e.g. a ratio over zero publications.
struct UndefinedInputError : Error {
    using Error::Error;
};

// Regression cohort too small or without spread in the regressor.
struct DegenerateCohortError : Error {
    using Error::Error;
};

} // namespace hindex
