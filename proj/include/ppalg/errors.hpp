#pragma once

#include <stdexcept>
#include <string>

namespace ppalg {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (bad ids, mismatched vertex sets, parse
// failures, out-of-catalog requests, corrupted tables).
class validation_error : public error {
public:
    using error::error;
};

// Division by an exact zero.  Kept distinct from validation_error so callers
// can tell arithmetic misuse from bad input data.
class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
    using error::error;
};

// A cyclotomic value was asked to convert to a rational but has nonzero
// coefficients outside the rational line.
class not_rational : public error {
public:
    using error::error;
};

// An operation would need path degrees beyond the truncation bound.
class degree_overflow : public error {
public:
    using error::error;
};

// A configured resource cap (path count, conductor size) was exceeded.
class resource_limit : public error {
public:
    using error::error;
};

// A file could not be read or written.
class io_error : public error {
public:
    using error::error;
};

} // namespace ppalg
